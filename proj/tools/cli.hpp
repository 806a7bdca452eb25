#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isingotto::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isingotto::cli
