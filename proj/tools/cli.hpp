#pragma once

#include <iosfwd>

namespace lifecode::cli {

// Exit codes: 0 success, 1 domain/constraint error, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lifecode::cli
