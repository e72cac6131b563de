#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpchoice::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kBudgetExceeded = 2,
  kInternalInconsistency = 3,
};

struct CommandResult {
  int exit_code = kOk;
  /// Exactly one JSON document (or CSV for `table`), newline-terminated.
  std::string payload;
  /// Human-readable diagnostics destined for standard error.
  std::string diagnostics;
};

/// argv excludes the program name. `in` feeds decide/cover when no --input is given.
CommandResult run(const std::vector<std::string>& argv, std::istream& in);

}  // namespace mpchoice::cli
