#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gzeta::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInputError = 2,
    kHypothesisViolation = 3,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; `in` backs "--edges -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace gzeta::cli
