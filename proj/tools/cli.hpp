#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kDomainError = 2,
  kResourceError = 3,
  kVerificationFailure = 4,
};

/// Entry point of the qspec tool. Normal output goes to out (or to --output),
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qspec::cli
