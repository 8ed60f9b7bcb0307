#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biperiodic::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biperiodic::cli
