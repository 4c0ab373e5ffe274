#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sidon2d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs one command line (args[0] is the program name). Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sidon2d::cli
