#pragma once

#include <iosfwd>

namespace prc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// Entry point for the `prc` tool. Data goes to `out` (or --out), diagnostics
// to `err`.
int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prc
