#pragma once

#include <array>
#include <chrono>
#include <cstddef>

namespace orbithodge {

enum class Phase { Groebner, Saturation, Resolution, Cohomology };
inline constexpr std::size_t kPhaseCount = 4;

/// Process-wide wall-clock totals per phase in milliseconds. Nested scopes of
/// the same phase on one thread are counted once.
std::array<double, kPhaseCount> phase_totals();
void reset_phase_totals();
const char* phase_name(Phase p);

class PhaseScope {
 public:
  explicit PhaseScope(Phase p);
  ~PhaseScope();
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  Phase phase_;
  bool outer_;
  std::chrono::steady_clock::time_point start_;
};

// Upper bound for internal worker threads (default 1).
void set_thread_limit(int n);
int thread_limit();

}  // namespace orbithodge
