#include "orbithodge/cohomology.hpp"

#include "orbithodge/errors.hpp"
#include "orbithodge/timing.hpp"

namespace orbithodge {

CohomologyEngine::CohomologyEngine(PresentedModule module) : module_(std::move(module)) {}

void CohomologyEngine::ensure_resolution() {
  std::call_once(once_, [this] {
    FreeResolution res = free_resolution(module_, module_.ring()->nvars());
    if (res.capped) throw ComputationError("free resolution is longer than the number of variables");
    PhaseScope scope(Phase::Cohomology);
    for (const auto& m : res.maps) duals_.push_back(m.transpose());
    res_ = std::move(res);
  });
}

const FreeResolution& CohomologyEngine::resolution() {
  ensure_resolution();
  return *res_;
}

// Rank in degree d of F_{i-1}^* -> F_i^*.
std::int64_t CohomologyEngine::dual_rank(int i, int d) {
  if (i < 1 || i > static_cast<int>(duals_.size())) return 0;
  {
    std::lock_guard lock(memo_mutex_);
    auto it = rank_memo_.find({i, d});
    if (it != rank_memo_.end()) return it->second;
  }
  std::int64_t r = map_rank_in_degree(duals_[static_cast<std::size_t>(i - 1)], d);
  std::lock_guard lock(memo_mutex_);
  rank_memo_[{i, d}] = r;
  return r;
}

std::int64_t CohomologyEngine::ext_dim(int i, int d) {
  if (i < 0) throw UsageError("Ext index must be non-negative");
  ensure_resolution();
  if (i >= static_cast<int>(res_->modules.size())) return 0;
  PhaseScope scope(Phase::Cohomology);
  const int n = module_.ring()->nvars();
  std::int64_t dim = 0;
  for (int a : res_->modules[static_cast<std::size_t>(i)].twists) dim += monomial_count(n, d + a);
  if (dim == 0) return 0;
  return dim - dual_rank(i, d) - dual_rank(i + 1, d);
}

std::int64_t CohomologyEngine::sheaf_dim(int q, int d) {
  if (q < 0) throw UsageError("cohomological degree must be non-negative");
  const int v = module_.ring()->nvars();
  if (q >= v) return 0;
  if (q >= 1) return ext_dim(v - q - 1, -d - v);
  std::int64_t md = 0;
  {
    PhaseScope scope(Phase::Cohomology);
    md = module_dimension_in_degree(module_, d);
  }
  return md - ext_dim(v, -d - v) + ext_dim(v - 1, -d - v);
}

std::int64_t ext_graded_dim(const PresentedModule& module, int i, int d) {
  CohomologyEngine engine(module);
  return engine.ext_dim(i, d);
}

std::int64_t sheaf_cohomology_dim(const PresentedModule& module, int q, int d) {
  CohomologyEngine engine(module);
  return engine.sheaf_dim(q, d);
}

}  // namespace orbithodge
