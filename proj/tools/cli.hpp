#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chevh1::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kOpenCase = 3, kOutOfScope = 4 };

/// Runs the command line in-process; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chevh1::cli
