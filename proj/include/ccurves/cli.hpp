#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ccurves::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidWord = 2,
  kInvalidSurface = 3,
  kCheckFailed = 4,
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccurves::cli
