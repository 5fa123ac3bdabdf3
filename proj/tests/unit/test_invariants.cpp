#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "orbithodge/invariants.hpp"

using namespace orbithodge;
using testutil::ideal;
using testutil::P;

namespace {

oracle::Module brute(const IdealHandle& I) {
  const RingPtr& r = I.ring();
  oracle::Module m{r->nvars(), r->field().modulus(), {0}, {}, {}};
  for (const auto& g : I.generators()) {
    m.rel_degrees.push_back(g.degree());
    m.rels.push_back({g});
  }
  return m;
}

// Homogeneous random ideal; terms of each generator share a random degree.
IdealHandle random_homogeneous(const RingPtr& r, std::mt19937& rng) {
  std::vector<Polynomial> gens;
  int n = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int k = 0; k < n; ++k) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Term> ts;
    int nt = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < nt; ++j) {
      Monomial m(r->nvars());
      int left = d;
      for (int i = 0; i + 1 < r->nvars(); ++i) {
        int e = std::uniform_int_distribution<int>(0, left)(rng);
        m.set(i, e);
        left -= e;
      }
      m.set(r->nvars() - 1, left);
      ts.push_back({m, static_cast<Coeff>(std::uniform_int_distribution<int>(1, 100)(rng))});
    }
    gens.emplace_back(r, std::move(ts));
  }
  return IdealHandle(r, gens);
}

}  // namespace

TEST_CASE("hilbert series examples") {
  auto r = testutil::ring({"x", "y"});
  auto zero = hilbert_series(IdealHandle(r, {})).reduced();
  CHECK(zero.numerator == std::vector<std::int64_t>{1});
  CHECK(zero.denominator_exponent == 2);
  auto sq = hilbert_series(ideal(r, {"x^2"})).reduced();
  CHECK(sq.numerator == std::vector<std::int64_t>{1, 1});
  CHECK(sq.denominator_exponent == 1);
  auto unreduced = hilbert_series(ideal(r, {"x^2"}));
  CHECK(unreduced.denominator_exponent == 2);
  CHECK_THROWS_AS(hilbert_series(ideal(r, {"x^2+y"})), UsageError);

  auto s = testutil::ring({"a", "b", "c", "d"});
  auto cubic = ideal(s, {"a*c-b^2", "b*d-c^2", "a*d-b*c"});
  auto hs = hilbert_series(cubic);
  auto b = brute(cubic);
  for (int d = 0; d <= 6; ++d) CHECK(hs.coefficient(d) == b.dim(d));
  auto nd = numerical_invariants(cubic);
  CHECK(nd.proj_dim == 1);
  CHECK(nd.degree == 3);
}

TEST_CASE("hilbert series agrees with graded dimensions on random ideals") {
  std::mt19937 rng(2024);
  int mismatches = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto r = testutil::ring(trial % 2 ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y", "z", "w"});
    auto I = random_homogeneous(r, rng);
    auto hs = hilbert_series(I);
    auto b = brute(I);
    for (int d = 0; d <= 6; ++d) mismatches += hs.coefficient(d) != b.dim(d);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("monomial hilbert series") {
  // k[x,y,z]/(xy, z^2): 1 + 3T + 4T^2 + 4T^3 + ...
  auto r = testutil::ring({"x", "y", "z"});
  auto hs = hilbert_series_of_monomials({P(r, "x*y").lead_monomial(), P(r, "z^2").lead_monomial()}, 3);
  std::vector<std::int64_t> want{1, 3, 4, 4, 4, 4};
  for (int d = 0; d < 6; ++d) CHECK(hs.coefficient(d) == want[static_cast<std::size_t>(d)]);
  CHECK(hilbert_series_of_monomials({Monomial(3)}, 3).is_zero());
}

TEST_CASE("dimension and degree") {
  std::vector<std::string> vars;
  for (int i = 0; i < 9; ++i) vars.push_back("v" + std::to_string(i));
  auto r9 = testutil::ring(vars);
  auto p8 = numerical_invariants(IdealHandle(r9, {}));
  CHECK(p8.proj_dim == 8);
  CHECK(p8.degree == 1);
  auto r = testutil::ring({"x", "y", "z"});
  CHECK(numerical_invariants(ideal(r, {"1"})).proj_dim == -1);
  CHECK_FALSE(numerical_invariants(ideal(r, {"x", "y", "z"})).degree.has_value());
  CHECK(numerical_invariants(ideal(r, {"x^2", "y^3"})).proj_dim == 0);
  CHECK(numerical_invariants(ideal(r, {"x^2", "y^3"})).degree == 6);
  CHECK(numerical_invariants(ideal(r, {"x^3+y^3+z^3"})).degree == 3);
}

TEST_CASE("dimension is stable under basis replacement and saturation") {
  std::mt19937 rng(99);
  auto r = testutil::ring({"x", "y", "z", "w"});
  for (int trial = 0; trial < 15; ++trial) {
    auto I = random_homogeneous(r, rng);
    auto gb = IdealHandle(r, I.groebner_basis());
    CHECK(numerical_invariants(gb).proj_dim == numerical_invariants(I).proj_dim);
    CHECK(numerical_invariants(saturate(I)).proj_dim == numerical_invariants(I).proj_dim);
  }
}

TEST_CASE("singular locus") {
  auto s = testutil::ring({"x", "y", "z", "w"});
  CHECK(singular_locus_codim(ideal(s, {"x^2+y^2+z^2+w^2"})) == 4);
  auto r = testutil::ring({"x", "y", "z"});
  auto nodal = ideal(r, {"y^2*z-x^3-x^2*z"});
  CHECK(singular_locus_codim(nodal) == 2);
  auto rep = invariant_report(nodal);
  CHECK_FALSE(rep.smooth);
  CHECK(rep.ambient_dim == 2);
  auto conic = invariant_report(ideal(r, {"x^2+y*z"}));
  CHECK(conic.smooth);
  CHECK(conic.sing_codim == 3);
  CHECK(conic.proj_dim == 1);
  CHECK(conic.degree == 2);
  // Cone over a conic: singular at the vertex.
  CHECK(singular_locus_codim(ideal(s, {"x*y-z^2"})) == 3);
  // Two points are smooth, a double point is not.
  CHECK(invariant_report(ideal(r, {"z", "x*y"})).smooth);
  CHECK_FALSE(invariant_report(ideal(r, {"z", "x^2"})).smooth);
  CHECK_THROWS_AS(singular_locus_codim(ideal(r, {"x+y^2"})), UsageError);
}

TEST_CASE("euler characteristic of the structure sheaf") {
  auto r = testutil::ring({"x", "y", "z"});
  CHECK(euler_char_structure_sheaf(IdealHandle(r, {})) == 1);
  CHECK(euler_char_structure_sheaf(ideal(r, {"x^2+y*z"})) == 1);
  CHECK(euler_char_structure_sheaf(ideal(r, {"x^3+y^3+z^3"})) == 0);
  CHECK(euler_char_structure_sheaf(ideal(r, {"x^4+y^4+z^4"})) == -2);
  auto s = testutil::ring({"x", "y", "z", "w"});
  CHECK(euler_char_structure_sheaf(ideal(s, {"x^2+y^2+z^2+w^2"})) == 1);
  CHECK(euler_char_structure_sheaf(ideal(s, {"x^4+y^4+z^4+w^4"})) == 2);
}

TEST_CASE("embedding reduction") {
  auto s = testutil::ring({"x", "y", "z", "w"});
  auto I = ideal(s, {"w-x-y", "x*y-z^2", "x-2*z"});
  auto red = reduce_embedding(I);
  CHECK(red.original_nvars == 4);
  CHECK(red.eliminated() == 2);
  CHECK(red.ideal.ring()->nvars() == 2);
  CHECK(numerical_invariants(red.ideal).proj_dim == numerical_invariants(I).proj_dim);
  CHECK(numerical_invariants(red.ideal).degree == numerical_invariants(I).degree);
  auto none = reduce_embedding(ideal(s, {"x*y-z*w"}));
  CHECK(none.eliminated() == 0);
  CHECK(none.kept == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("invariant report json") {
  auto r = testutil::ring({"x", "y", "z"});
  auto rep = invariant_report(ideal(r, {"x^2+y*z"}));
  CHECK(InvariantReport::from_json(rep.to_json()) == rep);
  auto empty = invariant_report(ideal(r, {"x", "y", "z"}));
  CHECK(empty.proj_dim == -1);
  CHECK(InvariantReport::from_json(empty.to_json()) == empty);
  CHECK_THROWS_AS(InvariantReport::from_json("[]"), UsageError);
}
