#pragma once

#include <ostream>

namespace spadic::cli {

// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_conjecture = 3;

inline constexpr int schema_version = 1;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spadic::cli
