#pragma once

#include <stdexcept>
#include <string>

namespace wog {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph text, unknown vertex, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap_name, std::size_t limit, std::size_t requested)
      : Error("cap exceeded: " + cap_name + " limit " + std::to_string(limit) +
              ", instance needs " + std::to_string(requested)),
        cap_name_(cap_name) {}

  const std::string& cap_name() const noexcept { return cap_name_; }

 private:
  std::string cap_name_;
};

}  // namespace wog
