#pragma once

#include <ostream>

namespace orbithodge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbithodge::cli
