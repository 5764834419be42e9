#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace agtaut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace agtaut::cli
