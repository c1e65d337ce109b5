#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wildcat {

enum ExitStatus {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitUnstable = 3,
  kExitInfiniteRank = 4,
  kExitVerification = 5,
};

/// Runs the command line `args` (without the program name). The JSON document
/// goes to `out`, the human summary and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wildcat
