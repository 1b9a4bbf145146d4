#pragma once

#include <ostream>

#include "symblob/errors.hpp"

namespace symblob::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitDomain = 4;

/// 3 for malformed mathematical input (not SPD, not symplectic, ...), 4 otherwise.
int exit_code_for(ErrorKind kind);

/// Runs one command line. Reports and data go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symblob::cli
