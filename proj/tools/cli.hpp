#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clifford::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags or unparsable expression
  kSingular = 2,  // inverse does not exist
  kVerifyFailed = 3,
};

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace clifford::cli
