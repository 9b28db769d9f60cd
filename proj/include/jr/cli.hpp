#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jr {

// Exit codes of the jr tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs the jr tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jr
