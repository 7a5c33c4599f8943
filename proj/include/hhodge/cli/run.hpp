#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hhodge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitNotComputable = 4;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhodge::cli
