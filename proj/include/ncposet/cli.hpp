#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncposet {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncposet
