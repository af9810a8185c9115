#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holocalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;  // a verification check failed or errored
inline constexpr int kExitDomain = 2;    // a module rejected its input
inline constexpr int kExitUsage = 64;    // bad flag, value or config file

/// Runs one command line (without the program name). The report goes to
/// `out`, usage and error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holocalc::cli
