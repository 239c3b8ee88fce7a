#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sec::cli {

/// Exit codes of the strongcolor tool.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,  ///< bad flags, unreadable files, parse errors, failed hypotheses
    kUncertified = 2, ///< fallback, uncertified or failed coloring, verification violations
    kTheoremViolation = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sec::cli
