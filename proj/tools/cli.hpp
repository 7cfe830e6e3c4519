#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtte::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

// Runs one command line (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtte::cli
