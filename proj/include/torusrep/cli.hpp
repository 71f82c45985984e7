#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torusrep::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name). JSON goes to
/// `out`, a human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusrep::cli
