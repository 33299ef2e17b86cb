#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbracket {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUsage = 64;

// Entry point of the qbracket command line. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace qbracket
