#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odom::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kGuardExceeded = 2;
inline constexpr int kInvariantViolation = 3;

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace odom::cli
