#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orbithodge/cohomology.hpp"
#include "orbithodge/ideal.hpp"
#include "orbithodge/invariants.hpp"

namespace orbithodge {

enum class CellSource { Computed, SymmetryFilled };

struct HodgeDiamond {
  int dim = 0;
  std::vector<std::vector<std::int64_t>> h;  // h[p][q]
  std::vector<std::vector<CellSource>> source;

  static HodgeDiamond zeros(int dim);
  std::int64_t at(int p, int q) const { return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }
  // h^{p,q} = h^{q,p} = h^{d-p,d-q} on every cell.
  bool symmetric() const;
  bool middle_row_zero() const;
  int computed_cells() const;

  std::string to_text() const;
  std::string to_json() const;
  static HodgeDiamond from_json(const std::string& text);
  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) { return a.dim == b.dim && a.h == b.h; }
};

// Omega^1 by the Euler sequence: the kernel of (S/I)(-1)^v -> S/I modulo the
// image of the Jacobian.
PresentedModule cotangent_module(const IdealHandle& ideal);

// Lambda^p Omega as coker over Lambda^{p+1} S(-1)^v: Koszul relations, I, and
// df ^ e_K. Same sheaf as exterior_power(cotangent_module(I), p).
PresentedModule differential_forms_module(const IdealHandle& ideal, int p);

enum class DiamondMode {
  SymmetryFill,  // one cell per symmetry class, smooth varieties only
  FullVerify,    // every cell, throws if the symmetries fail
  Direct,        // every cell, no smoothness requirement, symmetry only reported
};

/// Hodge numbers of Proj(S/I). The embedding is first cut down to the
/// linear span; the cohomology engine for each p is built once.
class HodgeCalculator {
 public:
  explicit HodgeCalculator(const IdealHandle& ideal);
  HodgeCalculator(const IdealHandle& ideal, const InvariantReport& report);

  const InvariantReport& report() const { return report_; }
  int dim() const { return report_.proj_dim; }
  // Requires smoothness.
  std::int64_t hodge_number(int p, int q);
  // No smoothness check.
  std::int64_t cell(int p, int q);
  HodgeDiamond diamond(DiamondMode mode);

 private:
  CohomologyEngine& engine(int p);

  IdealHandle reduced_;
  InvariantReport report_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<CohomologyEngine>> engines_;
};

std::int64_t hodge_number(const IdealHandle& ideal, int p, int q);
HodgeDiamond hodge_diamond(const IdealHandle& ideal, DiamondMode mode = DiamondMode::SymmetryFill);

// Cells computed in symmetry-fill mode for a d-dimensional variety.
std::vector<std::pair<int, int>> symmetry_representatives(int dim);

}  // namespace orbithodge
