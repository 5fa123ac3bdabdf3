#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbithodge/ideal.hpp"

namespace orbithodge {

/// numerator(T) / (1 - T)^denominator_exponent
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  int denominator_exponent = 0;

  // Cancels common (1 - T) factors; a zero numerator is left as is.
  HilbertSeries reduced() const;
  // Coefficient of T^d in the expansion.
  std::int64_t coefficient(int d) const;
  bool is_zero() const;
};

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> generators, int nvars);
HilbertSeries hilbert_series(const IdealHandle& ideal);

struct DimensionData {
  int proj_dim;                  // -1 for an empty Proj
  std::optional<std::int64_t> degree;
};

DimensionData numerical_invariants(const IdealHandle& ideal);

// Hilbert polynomial of S/I at 0.
std::int64_t euler_char_structure_sheaf(const IdealHandle& ideal);

/// Removes variables that are leading terms of linear forms in the reduced
/// basis. The result is the same projective scheme inside a smaller
/// projective space.
struct EmbeddingReduction {
  IdealHandle ideal;
  std::vector<int> kept;  // original index of each surviving variable
  int eliminated() const;
  int original_nvars = 0;
};

EmbeddingReduction reduce_embedding(const IdealHandle& ideal);

// v - Krull dim(S / (I + c x c Jacobian minors)), v when that ideal is
// irrelevant or the unit ideal.
int singular_locus_codim(const IdealHandle& ideal);

struct InvariantReport {
  int proj_dim = -1;
  std::optional<std::int64_t> degree;
  int sing_codim = 0;
  bool smooth = false;
  int ambient_dim = 0;

  std::string to_json() const;
  static InvariantReport from_json(const std::string& text);
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport invariant_report(const IdealHandle& ideal);

}  // namespace orbithodge
