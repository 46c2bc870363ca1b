#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycgroup::cli {

enum ExitCode : int {
  success = 0,
  assertion_failure = 1,
  input_error = 2,
  size_cap_exceeded = 3,
  internal_error = 4,
};

/// Runs the command line `args` (without the program name), writing reports to `out`
/// (or the --out file) and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycgroup::cli
