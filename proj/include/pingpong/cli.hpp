#pragma once

#include <string>
#include <vector>

namespace pingpong {

/// Outcome of one CLI invocation. Exit 0 on success, 1 when the operation
/// fails on well-formed input, 2 on usage or file-format errors.
struct CommandResult {
  int exit_code = 0;
  std::string out;  // JSON (or a table under --pretty)
  std::string err;
};

/// Runs a command line; args exclude the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace pingpong
