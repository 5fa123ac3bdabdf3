#include "orbithodge/timing.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace orbithodge {

namespace {

std::mutex g_mutex;
std::array<double, kPhaseCount> g_totals{};
thread_local std::array<int, kPhaseCount> t_depth{};
std::atomic<int> g_threads{1};

}  // namespace

std::array<double, kPhaseCount> phase_totals() {
  std::lock_guard lock(g_mutex);
  return g_totals;
}

void reset_phase_totals() {
  std::lock_guard lock(g_mutex);
  g_totals.fill(0.0);
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Groebner:
      return "groebner";
    case Phase::Saturation:
      return "saturation";
    case Phase::Resolution:
      return "resolution";
    case Phase::Cohomology:
      return "cohomology";
  }
  return "?";
}

PhaseScope::PhaseScope(Phase p)
    : phase_(p), outer_(t_depth[static_cast<std::size_t>(p)]++ == 0), start_(std::chrono::steady_clock::now()) {}

PhaseScope::~PhaseScope() {
  --t_depth[static_cast<std::size_t>(phase_)];
  if (!outer_) return;
  std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start_;
  std::lock_guard lock(g_mutex);
  g_totals[static_cast<std::size_t>(phase_)] += dt.count();
}

void set_thread_limit(int n) { g_threads = std::max(1, n); }
int thread_limit() { return g_threads; }

}  // namespace orbithodge
