#pragma once

#include <iosfwd>

namespace hwrbench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;  // also: non-conforming protocol-check
inline constexpr int kExitUsage = 2;

// Runs one verb. Results go to out, diagnostics to err; nothing touches the
// process streams, so tests can drive this directly.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hwrbench::cli
