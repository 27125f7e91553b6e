#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kViolation = 2,
  kInternalError = 3,
};

/// Runs the quermass command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qf::cli
