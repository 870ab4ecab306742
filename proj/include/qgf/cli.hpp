#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qgf/rational.hpp"

namespace qgf::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNotConverged = 3;

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "a:b:steps" -> steps+1 equally spaced points from a to b inclusive; a plain
/// literal -> that single point.
std::vector<Rational> parse_grid(std::string_view spec);

/// "a:b" -> a..b inclusive; a plain integer -> that value.
std::vector<int> parse_int_range(std::string_view spec);

/// Shortest round-trip decimal rendering, independent of the global locale.
std::string format_double(double v);

} // namespace qgf::cli
