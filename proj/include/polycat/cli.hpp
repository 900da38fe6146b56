#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotEqual = 1,
  kExitInvalid = 2,  // typing or validation failure
  kExitParse = 3,    // malformed input file, term or command line
  kExitUnsupported = 4,
};

/// Runs one command. `args` excludes the program name. Verdicts go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polycat
