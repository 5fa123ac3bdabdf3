#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orbithodge/ideal.hpp"
#include "orbithodge/vec.hpp"

namespace orbithodge {

// Number of monomials of degree d in n variables.
std::int64_t monomial_count(int nvars, int d);

/// sum_i S(-twists[i])
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  std::int64_t component_dimension(int d, int nvars) const;
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Homogeneous map between graded free modules, stored by columns. Column j
/// is the image of the j-th source generator as a vector over the target.
class GradedMap {
 public:
  GradedMap(RingPtr ring, GradedFreeModule target, GradedFreeModule source, std::vector<Vec> columns);
  // entries[i][j] maps source j to target i.
  static GradedMap from_entries(RingPtr ring, std::vector<int> target_twists, std::vector<int> source_twists,
                                const std::vector<std::vector<Polynomial>>& entries);
  static GradedMap zero(RingPtr ring, GradedFreeModule target, GradedFreeModule source);
  static GradedMap identity(RingPtr ring, GradedFreeModule module);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  const std::vector<Vec>& columns() const { return columns_; }
  Polynomial entry(int i, int j) const;

  bool is_degree_compatible() const;
  bool is_zero() const;
  // this o inner
  GradedMap compose(const GradedMap& inner) const;
  // Dual map Hom(target, S) -> Hom(source, S).
  GradedMap transpose() const;

 private:
  RingPtr ring_;
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<Vec> columns_;
};

/// coker(presentation). An optional base ideal records that the module lives
/// over S/I; its relations are already part of the presentation.
struct PresentedModule {
  GradedMap presentation;
  std::optional<IdealHandle> base_ideal;

  const RingPtr& ring() const { return presentation.ring(); }
  const GradedFreeModule& generators() const { return presentation.target(); }

  static PresentedModule free(RingPtr ring, std::vector<int> twists);
  // S/I as a cyclic module.
  static PresentedModule quotient_ring(const IdealHandle& ideal);
};

// Basis of F_d: (generator index, monomial), generator-major, monomials
// descending in grevlex.
std::vector<std::pair<int, Monomial>> graded_component_basis(const GradedFreeModule& module, int d, int nvars);

// Rank of the degree-d part of a degree-compatible map.
std::int64_t map_rank_in_degree(const GradedMap& map, int d);
// dim M_d = dim F_d - rank of the presentation in degree d.
std::int64_t module_dimension_in_degree(const PresentedModule& module, int d);

}  // namespace orbithodge
