#ifndef RCASPACE_TOOLS_APP_HPP
#define RCASPACE_TOOLS_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rcaspace::tools {

/// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_io = 2,
  exit_data = 3,
  exit_usage = 64,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rcaspace::tools

#endif
