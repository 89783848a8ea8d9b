#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cext::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kInvalidParams = 2,
  kVerificationFailed = 3,
};

/// Runs the cext-osc command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cext::cli
