#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbithodge/hodge.hpp"
#include "orbithodge/ideal.hpp"

namespace orbithodge {

/// Diagonal of H0; must be nonempty and sum to zero.
struct OrbitSpec {
  std::vector<int> h0;

  int n() const { return static_cast<int>(h0.size()) - 1; }
  void validate() const;
};

/// Orbit data plus the diagonal of a regular H and the fibre value.
struct FibreSpec {
  OrbitSpec orbit;
  std::vector<int> h;
  std::int64_t lambda = 0;

  void validate() const;
};

enum class SaturateBy { MaxIdeal, T };

struct CompactifyOptions {
  PrimeField field;
  SaturateBy saturate_by = SaturateBy::MaxIdeal;
};

/// Generic traceless (n+1)x(n+1) matrix over k[x_1..x_n, y_.., z_.., t]:
/// x's on the diagonal (last entry minus their sum), y's above and z's below
/// in row-major order, t the homogenizing variable.
struct GenericMatrix {
  RingPtr ring;
  std::vector<std::vector<Polynomial>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  const Polynomial& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  int homogenizer() const { return ring->nvars() - 1; }
};

GenericMatrix generic_traceless_matrix(int n, PrimeField field = PrimeField());

// Entries of prod_j (A - lambda_j Id) over the distinct values of h0, in
// first-occurrence order; generators row-major.
IdealHandle minimal_polynomial_ideal(const OrbitSpec& spec, const GenericMatrix& a);
IdealHandle minimal_polynomial_ideal(const OrbitSpec& spec, PrimeField field = PrimeField());

// sum_i h_i A_ii
Polynomial potential_polynomial(const std::vector<int>& h, const GenericMatrix& a);

IdealHandle orbit_compactification(const OrbitSpec& spec, const CompactifyOptions& options = {});
IdealHandle fibre_compactification(const FibreSpec& spec, const CompactifyOptions& options = {});

// { sum_i h_i h0_sigma(i) : sigma a permutation }, sorted and deduplicated.
std::vector<std::int64_t> critical_values(const OrbitSpec& orbit, const std::vector<int>& h, int max_size = 8);

// Diamond of P^n x P^n: h^{p,p} = n + 1 - |n - p|, zero elsewhere.
HodgeDiamond expected_minimal_flag_diamond(int n);

}  // namespace orbithodge
