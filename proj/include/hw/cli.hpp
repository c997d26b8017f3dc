#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hw::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name), writing reports
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hw::cli
