#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "orbithodge/graded.hpp"
#include "orbithodge/resolution.hpp"

namespace orbithodge {

struct CohomologyQuery {
  PresentedModule module;
  int q = 0;
  int twist = 0;
};

/// Sheaf cohomology of M~ on P^{v-1} by local duality. The resolution and
/// the dual maps are built once; queries are safe to run concurrently.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(PresentedModule module);

  const PresentedModule& module() const { return module_; }
  // dim Ext^i(M, S)_d
  std::int64_t ext_dim(int i, int d);
  // dim H^q(M~(d))
  std::int64_t sheaf_dim(int q, int d);
  const FreeResolution& resolution();

 private:
  std::int64_t dual_rank(int i, int d);
  void ensure_resolution();

  PresentedModule module_;
  std::once_flag once_;
  std::optional<FreeResolution> res_;
  std::vector<GradedMap> duals_;  // duals_[i] : F_i^* -> F_{i+1}^*
  std::mutex memo_mutex_;
  std::map<std::pair<int, int>, std::int64_t> rank_memo_;
};

std::int64_t ext_graded_dim(const PresentedModule& module, int i, int d);
std::int64_t sheaf_cohomology_dim(const PresentedModule& module, int q, int d);
inline std::int64_t sheaf_cohomology_dim(const CohomologyQuery& query) {
  return sheaf_cohomology_dim(query.module, query.q, query.twist);
}

}  // namespace orbithodge
