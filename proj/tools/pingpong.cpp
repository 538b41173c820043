#include <iostream>
#include <string>
#include <vector>

#include "pingpong/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const pingpong::CommandResult result = pingpong::run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
