#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wog::cli {

enum ExitStatus : int {
  kOk = 0,
  kPropertyViolation = 1,
  kInputError = 2,
  kCapExceeded = 3,
};

/// Runs one command line (without the program name) and returns its exit
/// status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for the input hash in JSON records.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace wog::cli
