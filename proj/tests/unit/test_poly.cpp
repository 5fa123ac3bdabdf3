#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace orbithodge;
using testutil::P;

TEST_CASE("field arithmetic basics") {
  PrimeField F;
  CHECK(F.modulus() == 32749u);
  CHECK(F.add(5, 32747) == 3);
  CHECK(F.inv(1) == 1);
  CHECK(PrimeField(7).inv(2) == 4);
  CHECK(F.neg(0) == 0);
  CHECK(F.sub(1, 2) == 32748);
  CHECK_THROWS_AS(F.inv(0), DomainError);
  CHECK_THROWS_AS(PrimeField(2), UsageError);
  CHECK_THROWS_AS(PrimeField(15), UsageError);
  CHECK(F.from_int(-1) == 32748);
  CHECK(F.to_signed(32748) == -1);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {7u, 31013u, 32749u, 2147483647u}) {
    PrimeField F(p);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int k = 0; k < 2000; ++k) {
      Coeff a = d(rng), b = d(rng), c = d(rng);
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.add(a, F.neg(a)) == 0);
    }
  }
}

namespace {

std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars) {
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, maxdeg);
  return out;
}

// Definition of grevlex: higher degree wins; otherwise the last nonzero entry
// of a - b decides, a negative entry meaning a is larger.
int grevlex_oracle(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int lex_oracle(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o == 0 ? 0 : (o > 0 ? 1 : -1); }

}  // namespace

TEST_CASE("grevlex examples") {
  auto g = TermOrder::grevlex();
  Monomial x{1, 0, 0}, y{0, 1, 0};
  CHECK(monomial_compare(x, y, g) == std::strong_ordering::greater);
  CHECK(monomial_compare(Monomial{3, 0, 0}, Monomial{2, 1, 0}, g) == std::strong_ordering::greater);
  CHECK(monomial_compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}, g) == std::strong_ordering::less);
  CHECK(grevlex_oracle(Monomial{3, 0, 0}, Monomial{2, 1, 0}) == 1);
  CHECK(grevlex_oracle(Monomial{1, 0, 1}, Monomial{0, 2, 0}) == -1);
  CHECK_THROWS_AS(monomial_compare(Monomial{1, 0}, Monomial{1, 0, 0}, g), UsageError);
}

TEST_CASE("orders agree with their definitions and are total, multiplicative") {
  auto mons = monomials_up_to(3, 4);
  REQUIRE(mons.size() == 35);
  for (auto order : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elimination(1)}) {
    for (const auto& a : mons) {
      for (const auto& b : mons) {
        int s = sign(monomial_compare(a, b, order));
        CHECK(s == -sign(monomial_compare(b, a, order)));
        CHECK((s == 0) == (a == b));
        if (order.kind() == TermOrder::Kind::Grevlex) CHECK(s == grevlex_oracle(a, b));
        if (order.kind() == TermOrder::Kind::Lex) CHECK(s == lex_oracle(a, b));
        if (order.kind() == TermOrder::Kind::Elimination && a[0] != b[0] ) {
          CHECK(s == (a[0] > b[0] ? 1 : -1));
        }
      }
    }
    int bad = 0;
    for (const auto& a : mons) {
      for (const auto& b : mons) {
        if (order.cmp(a, b) <= 0) continue;
        for (const auto& c : mons) {
          if (order.cmp(b, c) > 0 && order.cmp(a, c) <= 0) ++bad;
        }
        for (const auto& m : monomials_up_to(3, 2)) {
          if (order.cmp(a * m, b * m) <= 0) ++bad;
        }
      }
      if (!a.is_one()) CHECK(order.cmp(a, Monomial(3)) > 0);
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("polynomial arithmetic") {
  auto r = testutil::ring({"x", "y", "z"});
  CHECK(P(r, "x+y") * P(r, "x-y") == P(r, "x^2-y^2"));
  auto f = P(r, "3*x^2*y-z+7");
  CHECK((f + (-f)).is_zero());
  CHECK((f - f).to_string() == "0");
  CHECK_THROWS_AS(f + P(testutil::ring({"x", "y"}), "x"), UsageError);
}

TEST_CASE("binomial cube in characteristic 3") {
  auto r = testutil::ring({"x", "y"}, 3);
  auto cube = P(r, "x+y").pow(3);
  // C(3,k) mod 3 vanishes for 0 < k < 3.
  std::vector<Term> expected;
  for (int k = 0; k <= 3; ++k) {
    int binom = (k == 0 || k == 3) ? 1 : 3;
    if (binom % 3 != 0) expected.push_back({Monomial{3 - k, k}, static_cast<Coeff>(binom % 3)});
  }
  CHECK(cube == Polynomial(r, expected));
  CHECK(cube.to_string() == "x^3+y^3");
}

TEST_CASE("multiplication is commutative and associative on random input") {
  auto r = testutil::ring({"a", "b", "c", "d", "e"});
  std::mt19937 rng(5);
  for (int k = 0; k < 60; ++k) {
    auto f = testutil::random_poly(r, rng, 4, 5);
    auto g = testutil::random_poly(r, rng, 4, 5);
    auto h = testutil::random_poly(r, rng, 4, 5);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("canonical text form") {
  auto r = testutil::ring({"x_1", "x_2", "y_3", "t"});
  auto f = P(r, "x_1^2*y_3 - 2*x_2*t + 1 - x_2");
  CHECK(f.to_string() == "x_1^2*y_3-2*x_2*t-x_2+1");
  CHECK(P(r, f.to_string()) == f);
  CHECK(P(r, "x_1 * x_1 - x_2^2").to_string() == "x_1^2-x_2^2");
  CHECK_THROWS_AS(P(r, "x_1 + q"), UsageError);
}

TEST_CASE("specialize") {
  auto r = testutil::ring({"x", "y", "t"});
  CHECK(P(r, "x^2+y*t^2").specialize(std::map<std::string, std::int64_t>{{"t", 1}}) == P(r, "x^2+y"));
  auto f = P(r, "x^3-y*t+2");
  CHECK(f.specialize(std::map<int, Coeff>{}) == f);
  CHECK(P(r, "x-t").specialize(std::map<std::string, std::int64_t>{{"t", 1}, {"x", 1}}).is_zero());
}

TEST_CASE("exponent overflow is reported") {
  Monomial a = Monomial::variable(2, 0, 20000);
  CHECK_THROWS_AS(a * a, ComputationError);
}

TEST_CASE("homogenize") {
  auto r = testutil::ring({"x", "y", "t"});
  CHECK(P(r, "x^2+y").homogenize(2) == P(r, "x^2+y*t"));
  CHECK(P(r, "x^2+y^2").homogenize(2) == P(r, "x^2+y^2"));
  CHECK_THROWS_AS(P(r, "x+t").homogenize(2), UsageError);
}
