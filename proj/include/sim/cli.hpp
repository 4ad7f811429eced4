#pragma once

#include <iosfwd>

namespace sim {

// Exit codes: 0 success/verified, 1 refuted/false, 2 usage or parse error,
// 3 input ended mid-game in `play`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAborted = 3;

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sim
