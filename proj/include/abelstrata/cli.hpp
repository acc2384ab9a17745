// Command-line frontend. run_cli is the whole program minus process plumbing,
// so integration tests can drive it in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abelstrata {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitVerification = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelstrata
