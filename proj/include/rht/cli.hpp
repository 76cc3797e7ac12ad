#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rht {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInputError = 2 };

/// Runs `rht` with args (program name excluded), writing reports to out and
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rht
