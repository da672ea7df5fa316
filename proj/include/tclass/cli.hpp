#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tclass::cli {

enum ExitCode : int { kOk = 0, kConditionFailed = 1, kInvalid = 2 };

// Runs one invocation. args excludes the program name. Reports go to out;
// errors are written to err as a single JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tclass::cli
