#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace allot::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the `allot` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace allot::cli
