#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmcwpa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). `in` backs
/// `--candidates -` and `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mmcwpa::cli
