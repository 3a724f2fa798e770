#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obk::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kVerificationFailure = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obk::cli
