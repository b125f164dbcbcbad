#ifndef MONODEC_CLI_HPP
#define MONODEC_CLI_HPP

#include <string>
#include <vector>

namespace monodec::cli {

/// Exit codes: 0 success (negative mathematical answers included), 1 parse or
/// validation error, 2 internal invariant violation.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kInternalError = 2,
};

struct CommandResult {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
};

/// Runs one command line. args excludes the program name, e.g.
/// {"peel", "x + 2x^2 + 2x^3 + x^4", "--degree", "2"}.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace monodec::cli

#endif
