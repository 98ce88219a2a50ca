#ifndef SLACKMAT_TOOLS_CLI_HPP
#define SLACKMAT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace slackmat::cli {

/// Exit codes: verdict holds, verdict fails, usage or input error.
enum ExitStatus : int { kHolds = 0, kFails = 1, kError = 2 };

/// Runs one command line (without the program name). Verdicts go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slackmat::cli

#endif  // SLACKMAT_TOOLS_CLI_HPP
