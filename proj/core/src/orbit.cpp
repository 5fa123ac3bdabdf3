#include "orbithodge/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbithodge/timing.hpp"

namespace orbithodge {

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

Matrix multiply(const Matrix& a, const Matrix& b, const RingPtr& ring) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

std::vector<int> distinct_in_order(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

IdealHandle compactify(IdealHandle affine, const GenericMatrix& a, const CompactifyOptions& options) {
  IdealHandle hom = homogenize_ideal(affine, a.homogenizer());
  PhaseScope scope(Phase::Saturation);
  if (options.saturate_by == SaturateBy::T) {
    return saturate(hom, IdealHandle(a.ring, {Polynomial::variable(a.ring, a.homogenizer())}));
  }
  return saturate(hom);
}

}  // namespace

void OrbitSpec::validate() const {
  if (h0.empty()) throw UsageError("h0 must be nonempty");
  if (std::accumulate(h0.begin(), h0.end(), 0LL) != 0) throw UsageError("h0 must be traceless (entries sum to 0)");
  if (h0.size() < 2) throw UsageError("h0 needs at least two entries");
}

void FibreSpec::validate() const {
  orbit.validate();
  if (h.size() != orbit.h0.size()) throw UsageError("h and h0 must have the same length");
  if (std::accumulate(h.begin(), h.end(), 0LL) != 0) throw UsageError("h must be traceless (entries sum to 0)");
  std::set<int> seen(h.begin(), h.end());
  if (seen.size() != h.size()) throw UsageError("h must be regular (pairwise distinct entries)");
}

GenericMatrix generic_traceless_matrix(int n, PrimeField field) {
  if (n < 1) throw UsageError("matrix size parameter n must be at least 1");
  const int m = n * (n + 1) / 2;
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x_" + std::to_string(i));
  for (int i = 1; i <= m; ++i) vars.push_back("y_" + std::to_string(i));
  for (int i = 1; i <= m; ++i) vars.push_back("z_" + std::to_string(i));
  vars.push_back("t");
  GenericMatrix a;
  a.ring = Ring::make(std::move(vars), field, TermOrder::grevlex(), true);
  const int size = n + 1;
  a.entries.assign(static_cast<std::size_t>(size), std::vector<Polynomial>(static_cast<std::size_t>(size), Polynomial(a.ring)));
  int y = n, z = n + m;
  Polynomial trace(a.ring);
  for (int i = 0; i < n; ++i) {
    a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Polynomial::variable(a.ring, i);
    trace += Polynomial::variable(a.ring, i);
  }
  a.entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = -trace;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Polynomial::variable(a.ring, y++);
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < i; ++j) a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Polynomial::variable(a.ring, z++);
  }
  return a;
}

IdealHandle minimal_polynomial_ideal(const OrbitSpec& spec, const GenericMatrix& a) {
  spec.validate();
  if (a.size() != static_cast<int>(spec.h0.size())) throw UsageError("matrix size does not match h0");
  const auto& ring = a.ring;
  const std::size_t size = spec.h0.size();
  Matrix prod;
  for (int lambda : distinct_in_order(spec.h0)) {
    Matrix f = a.entries;
    for (std::size_t i = 0; i < size; ++i) f[i][i] -= Polynomial::constant(ring, lambda);
    prod = prod.empty() ? f : multiply(prod, f, ring);
  }
  std::vector<Polynomial> gens;
  for (const auto& row : prod) {
    for (const auto& e : row) gens.push_back(e);
  }
  return IdealHandle(ring, std::move(gens));
}

IdealHandle minimal_polynomial_ideal(const OrbitSpec& spec, PrimeField field) {
  spec.validate();
  return minimal_polynomial_ideal(spec, generic_traceless_matrix(spec.n(), field));
}

Polynomial potential_polynomial(const std::vector<int>& h, const GenericMatrix& a) {
  if (static_cast<int>(h.size()) != a.size()) throw UsageError("h does not match the matrix size");
  if (std::accumulate(h.begin(), h.end(), 0LL) != 0) throw UsageError("h must be traceless (entries sum to 0)");
  Polynomial f(a.ring);
  for (int i = 0; i < a.size(); ++i) f += a.at(i, i).scaled(a.ring->field().from_int(h[static_cast<std::size_t>(i)]));
  return f;
}

IdealHandle orbit_compactification(const OrbitSpec& spec, const CompactifyOptions& options) {
  spec.validate();
  GenericMatrix a = generic_traceless_matrix(spec.n(), options.field);
  return compactify(minimal_polynomial_ideal(spec, a), a, options);
}

IdealHandle fibre_compactification(const FibreSpec& spec, const CompactifyOptions& options) {
  spec.validate();
  GenericMatrix a = generic_traceless_matrix(spec.orbit.n(), options.field);
  IdealHandle mp = minimal_polynomial_ideal(spec.orbit, a);
  std::vector<Polynomial> gens = mp.generators();
  gens.push_back(potential_polynomial(spec.h, a) - Polynomial::constant(a.ring, spec.lambda));
  return compactify(IdealHandle(a.ring, std::move(gens)), a, options);
}

std::vector<std::int64_t> critical_values(const OrbitSpec& orbit, const std::vector<int>& h, int max_size) {
  orbit.validate();
  FibreSpec{orbit, h, 0}.validate();
  if (static_cast<int>(h.size()) > max_size) {
    throw UsageError("permutation enumeration capped at " + std::to_string(max_size) + " entries");
  }
  std::vector<int> perm = orbit.h0;
  std::sort(perm.begin(), perm.end());
  std::set<std::int64_t> values;
  do {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += static_cast<std::int64_t>(h[i]) * perm[i];
    values.insert(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {values.begin(), values.end()};
}

HodgeDiamond expected_minimal_flag_diamond(int n) {
  if (n < 1) throw UsageError("n must be at least 1");
  HodgeDiamond d = HodgeDiamond::zeros(2 * n);
  for (int p = 0; p <= 2 * n; ++p) d.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = n + 1 - std::abs(n - p);
  return d;
}

}  // namespace orbithodge
