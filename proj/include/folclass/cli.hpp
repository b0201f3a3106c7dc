#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folclass {

/// Exit codes of `run`.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  /// The run completed and found counterexamples (unmatched classes, unsound instances,
  /// a vanishing trace).
  kExitFindings = 2,
};

/// Entry point of the folclass command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folclass
