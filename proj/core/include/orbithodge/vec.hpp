#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "orbithodge/field.hpp"
#include "orbithodge/monomial.hpp"

namespace orbithodge {

/// One term c * m * e_comp of an element of a free module.
struct VTerm {
  Monomial mono;
  std::int32_t comp;
  Coeff coeff;
};

/// Free-module element, terms strictly descending in some module order.
/// Polynomials are rank-one vectors with comp == 0.
using Vec = std::vector<VTerm>;

/// Ring order lifted to rank one (the component is ignored).
struct PolyOrder {
  TermOrder order;

  int weight(const Monomial& m, int) const { return m.degree(); }
  int cmp(const Monomial& a, int, const Monomial& b, int) const { return order.cmp(a, b); }
};

/// Graded order on a free module with twists: weighted degree deg(m) +
/// twist[comp], then reverse lexicographic on exponents (last variable
/// first), then smaller component index is larger. On rank one with twist 0
/// this is grevlex, and the last variable behaves as in Bayer's criterion:
/// for homogeneous elements, x_last divides the lead term iff it divides
/// every term.
struct GradedModuleOrder {
  std::vector<int> twists;

  int weight(const Monomial& m, int comp) const { return m.degree() + twists[static_cast<std::size_t>(comp)]; }
  int cmp(const Monomial& a, int ca, const Monomial& b, int cb) const {
    int wa = weight(a, ca), wb = weight(b, cb);
    if (wa != wb) return wa > wb ? 1 : -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

/// Components below `split` dominate every component at or above it; inside a
/// block the graded order applies. Used to compute syzygies by augmenting each
/// generator with a unit vector.
struct BlockModuleOrder {
  int split;
  GradedModuleOrder inner;

  int weight(const Monomial& m, int comp) const { return inner.weight(m, comp); }
  int cmp(const Monomial& a, int ca, const Monomial& b, int cb) const {
    bool ua = ca < split, ub = cb < split;
    if (ua != ub) return ua ? 1 : -1;
    return inner.cmp(a, ca, b, cb);
  }
};

namespace vec {

template <class Order>
void sort_terms(Vec& v, const Order& ord) {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return ord.cmp(a.mono, a.comp, b.mono, b.comp) > 0; });
}

// Sorts, combines equal terms and removes zeros.
template <class Order>
void normalize(Vec& v, const Order& ord, const PrimeField& F) {
  sort_terms(v, ord);
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  v = std::move(out);
}

// a + c * m * b
template <class Order>
Vec add_scaled(const Vec& a, Coeff c, const Monomial& m, const Vec& b, const Order& ord, const PrimeField& F,
               std::size_t skip_b = 0) {
  Vec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = skip_b;
  VTerm tb;
  bool have_b = false;
  auto load_b = [&]() {
    if (j < b.size()) {
      tb.mono = b[j].mono * m;
      tb.comp = b[j].comp;
      tb.coeff = F.mul(b[j].coeff, c);
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() && have_b) {
    int s = ord.cmp(a[i].mono, a[i].comp, tb.mono, tb.comp);
    if (s > 0) {
      r.push_back(a[i++]);
    } else if (s < 0) {
      r.push_back(tb);
      ++j;
      load_b();
    } else {
      Coeff sum = F.add(a[i].coeff, tb.coeff);
      if (sum != 0) r.push_back({a[i].mono, a[i].comp, sum});
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  while (have_b) {
    r.push_back(tb);
    ++j;
    load_b();
  }
  return r;
}

inline void scale(Vec& v, Coeff c, const PrimeField& F) {
  for (auto& t : v) t.coeff = F.mul(t.coeff, c);
}

inline void make_monic(Vec& v, const PrimeField& F) {
  if (v.empty() || v.front().coeff == 1) return;
  scale(v, F.inv(v.front().coeff), F);
}

}  // namespace vec

}  // namespace orbithodge
