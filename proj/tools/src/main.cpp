#include <iostream>

#include "wog_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wog::cli::run(args, std::cout, std::cerr);
}
