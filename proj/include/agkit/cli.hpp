#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace agkit {

/// Exit codes of the agkit command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  ///< a check came out negative
inline constexpr int kExitUsage = 2;     ///< bad arguments or unreadable input

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace agkit
