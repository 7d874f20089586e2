#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `qhv` tool. `args` excludes the program name.
/// Subcommands: compute, generate, bench, exponent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhv::cli
