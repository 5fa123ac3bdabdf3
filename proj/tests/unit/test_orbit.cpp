#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "orbithodge/orbit.hpp"

using namespace orbithodge;

TEST_CASE("generic traceless matrix") {
  auto a = generic_traceless_matrix(2);
  REQUIRE(a.size() == 3);
  const char* want[3][3] = {{"x_1", "y_1", "y_2"}, {"z_1", "x_2", "y_3"}, {"z_2", "z_3", "-x_1-x_2"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a.at(i, j) == testutil::P(a.ring, want[i][j]));
  CHECK(a.ring->variable(a.homogenizer()) == "t");
  CHECK(a.ring->nvars() == 9);
  auto b = generic_traceless_matrix(1);
  CHECK(b.at(0, 0) == testutil::P(b.ring, "x_1"));
  CHECK(b.at(0, 1) == testutil::P(b.ring, "y_1"));
  CHECK(b.at(1, 0) == testutil::P(b.ring, "z_1"));
  CHECK(b.at(1, 1) == testutil::P(b.ring, "-x_1"));
  for (int n = 1; n <= 3; ++n) {
    auto m = generic_traceless_matrix(n);
    Polynomial tr(m.ring);
    for (int i = 0; i < m.size(); ++i) tr += m.at(i, i);
    CHECK(tr.is_zero());
  }
  CHECK_THROWS_AS(generic_traceless_matrix(0), UsageError);
  CHECK_THROWS_AS(generic_traceless_matrix(4), UsageError);
}

TEST_CASE("minimal polynomial ideals") {
  auto a = generic_traceless_matrix(2);
  auto I = minimal_polynomial_ideal(OrbitSpec{{2, -1, -1}}, a);
  REQUIRE(I.generators().size() == 9);
  // (A + 1)(A - 2) entry (0,0)
  CHECK(I.generators()[0] == testutil::P(a.ring, "x_1^2+y_1*z_1+y_2*z_2-x_1-2"));
  auto b = generic_traceless_matrix(1);
  auto sl2 = minimal_polynomial_ideal(OrbitSpec{{1, -1}}, b);
  CHECK(same_ideal(sl2, testutil::ideal(b.ring, {"x_1^2+y_1*z_1-1"})));
  auto zero = minimal_polynomial_ideal(OrbitSpec{{0, 0}}, b);
  CHECK(same_ideal(zero, testutil::ideal(b.ring, {"x_1", "y_1", "z_1"})));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((OrbitSpec{{1, 1}}.validate()), UsageError);
  CHECK_THROWS_AS((OrbitSpec{{}}.validate()), UsageError);
  CHECK_NOTHROW((OrbitSpec{{2, -1, -1}}.validate()));
  CHECK_THROWS_AS((FibreSpec{OrbitSpec{{2, -1, -1}}, {0, 0, 0}, 1}.validate()), UsageError);
  CHECK_THROWS_AS((FibreSpec{OrbitSpec{{2, -1, -1}}, {1, -1}, 1}.validate()), UsageError);
  CHECK_THROWS_AS((FibreSpec{OrbitSpec{{2, -1, -1}}, {2, -1, 0}, 1}.validate()), UsageError);
  CHECK_NOTHROW((FibreSpec{OrbitSpec{{2, -1, -1}}, {1, -1, 0}, 1}.validate()));
}

TEST_CASE("potential") {
  auto a = generic_traceless_matrix(2);
  CHECK(potential_polynomial({1, -1, 0}, a) == testutil::P(a.ring, "x_1-x_2"));
  CHECK(potential_polynomial({0, 0, 0}, a).is_zero());
  auto b = generic_traceless_matrix(1);
  CHECK(potential_polynomial({1, -1}, b) == testutil::P(b.ring, "2*x_1"));
}

TEST_CASE("critical values") {
  CHECK(critical_values(OrbitSpec{{2, -1, -1}}, {1, -1, 0}) == std::vector<std::int64_t>{-3, 0, 3});
  CHECK(critical_values(OrbitSpec{{1, -1}}, {1, -1}) == std::vector<std::int64_t>{-2, 2});
  std::vector<int> h0{3, 1, -4}, h{2, -3, 1};
  auto base = critical_values(OrbitSpec{h0}, h);
  std::int64_t ident = 0;
  for (std::size_t i = 0; i < h.size(); ++i) ident += h[i] * h0[i];
  CHECK(std::binary_search(base.begin(), base.end(), ident));
  std::sort(h0.begin(), h0.end());
  do {
    CHECK(critical_values(OrbitSpec{h0}, h) == base);
  } while (std::next_permutation(h0.begin(), h0.end()));
  CHECK_THROWS_AS(critical_values(OrbitSpec{{1, -1}}, {0, 0}), UsageError);
  CHECK_THROWS_AS(critical_values(OrbitSpec{std::vector<int>(10, 0)}, std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, -45}), UsageError);
}

TEST_CASE("sl2 compactifications") {
  auto b = generic_traceless_matrix(1);
  auto X = orbit_compactification(OrbitSpec{{1, -1}});
  CHECK(same_ideal(X, testutil::ideal(X.ring(), {"x_1^2+y_1*z_1-t^2"})));
  auto rep = invariant_report(X);
  CHECK(rep.proj_dim == 2);
  CHECK(rep.smooth);
  CHECK(hodge_diamond(X) == expected_minimal_flag_diamond(1));
  // The orbit of 0 is the origin; its closure is the single point (0:0:0:1).
  auto pt = orbit_compactification(OrbitSpec{{0, 0}});
  CHECK(invariant_report(pt).proj_dim == 0);
  CHECK(invariant_report(pt).degree == 1);
  CHECK(same_ideal(pt, testutil::ideal(pt.ring(), {"x_1", "y_1", "z_1"})));
  auto F = fibre_compactification(FibreSpec{OrbitSpec{{1, -1}}, {1, -1}, 0});
  CHECK(same_ideal(F, testutil::ideal(F.ring(), {"x_1^2+y_1*z_1-t^2", "2*x_1"})));
  HodgeDiamond conic = hodge_diamond(F);
  CHECK(conic.h == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
}

TEST_CASE("generator order does not change the saturated ideal") {
  auto a = generic_traceless_matrix(1);
  auto I = minimal_polynomial_ideal(OrbitSpec{{1, -1}}, a);
  std::vector<Polynomial> gens(I.generators().begin(), I.generators().end());
  gens.push_back(Polynomial(a.ring));
  std::reverse(gens.begin(), gens.end());
  const int t = a.homogenizer();
  auto forward = saturate(homogenize_ideal(I, t));
  auto backward = saturate(homogenize_ideal(IdealHandle(a.ring, gens), t));
  CHECK(same_ideal(forward, backward));
}

TEST_CASE("saturation choices") {
  CompactifyOptions by_t;
  by_t.saturate_by = SaturateBy::T;
  auto a = orbit_compactification(OrbitSpec{{1, -1}});
  auto b = orbit_compactification(OrbitSpec{{1, -1}}, by_t);
  CHECK(same_ideal(a, b));
  CompactifyOptions other;
  other.field = PrimeField(31013);
  auto c = orbit_compactification(OrbitSpec{{1, -1}}, other);
  CHECK(c.ring()->field().modulus() == 31013);
}

TEST_CASE("expected minimal flag diamond") {
  auto one = expected_minimal_flag_diamond(1);
  CHECK(one.dim == 2);
  CHECK(one.h == std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  auto two = expected_minimal_flag_diamond(2);
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) CHECK(two.at(p, q) == (p == q ? std::vector<int>{1, 2, 3, 2, 1}[static_cast<std::size_t>(p)] : 0));
  CHECK(expected_minimal_flag_diamond(5).symmetric());
  CHECK_THROWS_AS(expected_minimal_flag_diamond(0), UsageError);
}
