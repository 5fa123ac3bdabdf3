#pragma once

#include <random>
#include <string>
#include <vector>

#include "orbithodge/ideal.hpp"
#include "orbithodge/polynomial.hpp"

namespace testutil {

using namespace orbithodge;

inline RingPtr ring(std::vector<std::string> vars, std::uint32_t p = kDefaultPrime,
                    TermOrder order = TermOrder::grevlex()) {
  return Ring::make(std::move(vars), PrimeField(p), order);
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

inline IdealHandle ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  return IdealHandle::parse(r, gens);
}

// Random sparse polynomial with small coefficients.
inline Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coef(1, static_cast<int>(r->field().modulus()) - 1);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m(r->nvars());
    int budget = std::uniform_int_distribution<int>(0, max_deg)(rng);
    for (int i = 0; i < r->nvars() && budget > 0; ++i) {
      int e = std::uniform_int_distribution<int>(0, budget)(rng);
      m.set(i, e);
      budget -= e;
    }
    terms.push_back({m, static_cast<Coeff>(coef(rng))});
  }
  return Polynomial(r, std::move(terms));
}

// Division by a list with the first-divisor rule, recording quotients.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

inline Division divide(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const RingPtr& r = f.ring();
  const auto& F = r->field();
  Division out{std::vector<Polynomial>(basis.size(), Polynomial(r)), Polynomial(r)};
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Term& b = basis[i].lead();
      if (!b.mono.divides(lt.mono)) continue;
      Coeff c = F.mul(lt.coeff, F.inv(b.coeff));
      Polynomial q = Polynomial::monomial(r, lt.mono / b.mono, c);
      out.quotients[i] += q;
      p -= q * basis[i];
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial l = Polynomial::monomial(r, lt.mono, lt.coeff);
      out.remainder += l;
      p -= l;
    }
  }
  return out;
}

inline Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  const RingPtr& r = f.ring();
  const auto& F = r->field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial a = f.times_term(l / f.lead_monomial(), F.inv(f.lead_coeff()));
  Polynomial b = g.times_term(l / g.lead_monomial(), F.inv(g.lead_coeff()));
  return a - b;
}

// Every S-polynomial reduces to zero by plain division.
inline bool s_pair_closed(const std::vector<Polynomial>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (!testutil::divide(testutil::s_poly(gb[i], gb[j]), gb).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace testutil
