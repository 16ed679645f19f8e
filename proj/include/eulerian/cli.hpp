#pragma once

#include <ostream>

namespace eulerian {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // a theorem check failed, or another library error
  kExitUsage = 2,    // bad flags or a malformed window
  kExitBudget = 3,
  kExitNotPalindromic = 4,
};

/// Full CLI: subcommands poly, decompose, verify, conjecture and stats.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerian
