#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmxray::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace asmxray::cli
