#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kaleido::cli {

/// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace kaleido::cli
