#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = mpchoice::cli::run(args, std::cin);
  std::cout << result.payload;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
