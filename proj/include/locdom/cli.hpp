#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locdom {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitPrecondition = 1,  // infeasible instance, violated precondition, bad input
  kExitUsage = 2,
  kExitViolation = 3,  // verify found a counterexample
};

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace locdom
