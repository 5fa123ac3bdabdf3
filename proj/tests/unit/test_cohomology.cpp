#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "orbithodge/cohomology.hpp"

using namespace orbithodge;
using testutil::P;

namespace {

RingPtr projective(int n) {
  std::vector<std::string> vars;
  for (int i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return testutil::ring(vars);
}

PresentedModule cyclic(const RingPtr& r, const std::vector<std::string>& gens) {
  return PresentedModule::quotient_ring(testutil::ideal(r, gens));
}

}  // namespace

TEST_CASE("ext of simple modules") {
  auto r = testutil::ring({"x", "y"});
  auto S = PresentedModule::free(r, {0});
  CHECK(ext_graded_dim(S, 0, 0) == 1);
  CHECK(ext_graded_dim(S, 0, 1) == 2);
  CHECK(ext_graded_dim(S, 0, -1) == 0);
  for (int i = 1; i <= 3; ++i)
    for (int d = -4; d <= 4; ++d) CHECK(ext_graded_dim(S, i, d) == 0);
  auto pt = cyclic(r, {"x", "y"});
  CHECK(ext_graded_dim(pt, 2, -2) == 1);
  CHECK(ext_graded_dim(pt, 2, -1) == 0);
  CHECK(ext_graded_dim(pt, 1, -2) == 0);
  CHECK(ext_graded_dim(pt, 0, 0) == 0);
  CHECK_THROWS_AS(ext_graded_dim(pt, -1, 0), UsageError);
}

TEST_CASE("line bundles on projective space") {
  CHECK(sheaf_cohomology_dim(PresentedModule::free(projective(2), {0}), 0, 2) == 6);
  CHECK(sheaf_cohomology_dim(PresentedModule::free(projective(1), {0}), 1, -2) == 1);
  CHECK(sheaf_cohomology_dim(PresentedModule::free(projective(2), {0}), 2, -3) == 1);
  int mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    CohomologyEngine engine(PresentedModule::free(projective(n), {0}));
    for (int d = -5; d <= 5; ++d)
      for (int q = 0; q <= n; ++q)
        if (engine.sheaf_dim(q, d) != oracle::bott(n, 0, q, d)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("twisted free modules") {
  auto r = projective(2);
  CohomologyEngine engine(PresentedModule::free(r, {2, -1}));
  for (int d = -6; d <= 4; ++d)
    for (int q = 0; q <= 2; ++q)
      CHECK(engine.sheaf_dim(q, d) == oracle::bott(2, 0, q, d - 2) + oracle::bott(2, 0, q, d + 1));
}

TEST_CASE("serre duality on the quadric surface") {
  auto r = projective(3);
  CohomologyEngine ox(cyclic(r, {"x0^2+x1^2+x2^2+x3^2"}));
  for (int d = -2; d <= 2; ++d)
    for (int q = 0; q <= 2; ++q) CHECK(ox.sheaf_dim(q, d) == ox.sheaf_dim(2 - q, -2 - d));
  CHECK(ox.sheaf_dim(0, 0) == 1);
  CHECK(ox.sheaf_dim(2, -2) == 1);
  CHECK(ox.sheaf_dim(1, -1) == 0);
}

TEST_CASE("euler characteristic equals the hilbert polynomial") {
  struct Case {
    int n;
    std::vector<std::string> gens;
    int dim;
  };
  std::vector<Case> cases{
      {2, {"x0*x1-x2^2"}, 1},
      {3, {"x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"}, 1},
      {3, {"x0^2+x1^2+x2^2+x3^2"}, 2},
      {3, {"x0*x1", "x2^3"}, 1},
      {2, {"x0^2", "x0*x1"}, 1},
  };
  for (const auto& c : cases) {
    auto r = projective(c.n);
    auto m = cyclic(r, c.gens);
    oracle::Module brute{r->nvars(), r->field().modulus(), {0}, {}, {}};
    for (const auto& g : m.base_ideal->generators()) {
      brute.rel_degrees.push_back(g.degree());
      brute.rels.push_back({g});
    }
    CohomologyEngine engine(m);
    for (int d = -3; d <= 3; ++d) {
      std::int64_t chi = 0;
      for (int q = 0; q <= c.n; ++q) chi += (q % 2 ? -1 : 1) * engine.sheaf_dim(q, d);
      auto hf = [&](int e) { return brute.dim(e); };
      CHECK(chi == oracle::interpolate(hf, 8, c.dim, d));
    }
  }
}

TEST_CASE("unsaturated modules give sheaf answers") {
  auto r = projective(2);
  // (x0^2, x0 x1, x0 x2) and (x0) agree as sheaves.
  CohomologyEngine a(cyclic(r, {"x0^2", "x0*x1", "x0*x2"}));
  CohomologyEngine b(cyclic(r, {"x0"}));
  for (int d = -3; d <= 3; ++d)
    for (int q = 0; q <= 2; ++q) CHECK(a.sheaf_dim(q, d) == b.sheaf_dim(q, d));
  CohomologyEngine m(cyclic(r, {"x0", "x1", "x2"}));
  for (int d = -3; d <= 3; ++d)
    for (int q = 0; q <= 2; ++q) CHECK(m.sheaf_dim(q, d) == 0);
}

TEST_CASE("presentation independence") {
  auto r = projective(2);
  auto base = cyclic(r, {"x0*x1-x2^2"});
  // Extra generator e1 of twist 1 with relation e1 = x0 e0.
  std::vector<std::vector<Polynomial>> entries{{P(r, "x0*x1-x2^2"), P(r, "x0")}, {P(r, "0"), P(r, "-1")}};
  PresentedModule padded{GradedMap::from_entries(r, {0, 1}, {2, 1}, entries), std::nullopt};
  CohomologyEngine a(base), b(padded);
  for (int d = -3; d <= 3; ++d)
    for (int q = 0; q <= 2; ++q) CHECK(a.sheaf_dim(q, d) == b.sheaf_dim(q, d));
}
