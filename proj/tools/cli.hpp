#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestlogit::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailed = 2 };

/// Runs the command line (without the program name). The report goes to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestlogit::cli
