// Command-line front end. The executable is a thin wrapper over run_cli so
// tests can drive every command in-process.
#pragma once

#include <iosfwd>

namespace semifree {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit status: 0 all checks pass, 1 some constraint fails, 2 bad usage or input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semifree
