#pragma once

// Brute-force linear algebra used to check graded computations degree by
// degree. Nothing here calls into the library beyond polynomial arithmetic.

#include <cstdint>
#include <map>
#include <vector>

#include "orbithodge/polynomial.hpp"

namespace oracle {

using Row = std::map<std::int64_t, std::uint64_t>;

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Gaussian elimination on dense copies of sparse rows.
inline std::int64_t rank(const std::vector<Row>& rows, std::uint64_t p) {
  std::map<std::int64_t, std::size_t> cols;
  for (const auto& r : rows)
    for (const auto& [c, v] : r)
      if (v % p) cols.emplace(c, 0);
  std::size_t k = 0;
  for (auto& [c, idx] : cols) idx = k++;
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> d(k, 0);
    for (const auto& [c, v] : r)
      if (v % p) d[cols[c]] = v % p;
    m.push_back(std::move(d));
  }
  std::int64_t rk = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    std::uint64_t inv = powmod(m[row][c], p - 2, p);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      std::uint64_t f = m[i][c];
      if (!f) continue;
      for (std::size_t j = c; j < k; ++j) m[i][j] = (m[i][j] + (p - f) * m[row][j]) % p;
    }
    ++row;
    ++rk;
  }
  return rk;
}

inline std::vector<std::vector<int>> exponents(int n, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// A graded module coker(relations) with relation columns given entrywise.
struct Module {
  int nvars = 0;
  std::uint64_t p = 0;
  std::vector<int> gen_twists;
  std::vector<int> rel_degrees;
  std::vector<std::vector<orbithodge::Polynomial>> rels;  // rels[j][i]: entry at generator i

  // Unique key for (wedge index, generator, exponent vector).
  std::int64_t key(std::int64_t wedge, int gen, const std::vector<int>& e) const {
    std::int64_t k = wedge * static_cast<std::int64_t>(gen_twists.size()) + gen;
    for (int x : e) k = k * 64 + x;
    return k;
  }

  std::vector<Row> relation_rows(int d, std::int64_t wedge = 0) const {
    std::vector<Row> out;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      for (const auto& m : exponents(nvars, d - rel_degrees[j])) {
        Row r;
        for (std::size_t i = 0; i < rels[j].size(); ++i) {
          for (const auto& t : rels[j][i].terms()) {
            std::vector<int> e(static_cast<std::size_t>(nvars));
            for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] = t.mono[v] + m[static_cast<std::size_t>(v)];
            auto& x = r[key(wedge, static_cast<int>(i), e)];
            x = (x + t.coeff) % p;
          }
        }
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  std::int64_t free_dim(int d) const {
    std::int64_t s = 0;
    for (int a : gen_twists) s += static_cast<std::int64_t>(exponents(nvars, d - a).size());
    return s;
  }

  std::int64_t dim(int d) const { return free_dim(d) - rank(relation_rows(d), p); }

  // dim Tor_i(M, k)_j from the Koszul complex on the variables.
  std::int64_t tor(int i, int j) const {
    auto subsets = [&](int k) {
      std::vector<std::vector<int>> out;
      for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int v = 0; v < nvars; ++v)
          if (mask >> v & 1) s.push_back(v);
        out.push_back(s);
      }
      return out;
    };
    auto mask_of = [](const std::vector<int>& s) {
      std::int64_t m = 0;
      for (int v : s) m |= std::int64_t{1} << v;
      return m;
    };
    // rank of d_k : K_k -> K_{k-1} in internal degree j, on M.
    auto koszul_rank = [&](int k) -> std::int64_t {
      if (k <= 0 || k > nvars) return 0;
      std::vector<Row> target_rel;
      for (const auto& s : subsets(k - 1)) {
        auto rr = relation_rows(j - (k - 1), mask_of(s));
        target_rel.insert(target_rel.end(), rr.begin(), rr.end());
      }
      std::vector<Row> all = target_rel;
      for (const auto& s : subsets(k)) {
        for (std::size_t g = 0; g < gen_twists.size(); ++g) {
          for (const auto& m : exponents(nvars, j - k - gen_twists[g])) {
            Row r;
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
              std::vector<int> rest = s;
              rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
              std::vector<int> e = m;
              ++e[static_cast<std::size_t>(s[pos])];
              r[key(mask_of(rest), static_cast<int>(g), e)] = (pos % 2) ? p - 1 : 1;
            }
            all.push_back(std::move(r));
          }
        }
      }
      return rank(all, p) - rank(target_rel, p);
    };
    std::int64_t total = choose(nvars, i) * dim(j - i);
    return total - koszul_rank(i) - koszul_rank(i + 1);
  }
};

// Generalised binomial C(a, k) for any integer a and k >= 0.
inline std::int64_t gbinom(std::int64_t a, int k) {
  if (k < 0) return 0;
  // exact for the small arguments used in tests
  long double num = 1;
  for (int i = 0; i < k; ++i) num = num * static_cast<long double>(a - i) / static_cast<long double>(i + 1);
  return static_cast<std::int64_t>(num < 0 ? num - 0.5L : num + 0.5L);
}

// h^q(P^n, Omega^p(d)), Bott's formula. p = 0 gives line bundles.
inline std::int64_t bott(int n, int p, int q, int d) {
  if (p < 0 || p > n || q < 0 || q > n) return 0;
  if (q == 0 && d > p) return choose(d + n - p, d) * choose(d - 1, p);
  if (q == 0 && p == 0 && d == 0) return 1;
  if (q == n && d < p - n) return choose(-d + p, -d) * choose(-d - 1, n - p);
  if (q == n && p == n && d == 0) return 1;
  if (d == 0 && p == q) return 1;
  return 0;
}

// Value at d of the polynomial agreeing with f on start..start+deg.
template <class F>
std::int64_t interpolate(F f, int start, int deg, int d) {
  std::vector<std::int64_t> diffs;
  for (int i = 0; i <= deg; ++i) diffs.push_back(f(start + i));
  std::vector<std::int64_t> lead;
  while (!diffs.empty()) {
    lead.push_back(diffs.front());
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  std::int64_t v = 0;
  for (std::size_t k = 0; k < lead.size(); ++k) v += lead[k] * gbinom(d - start, static_cast<int>(k));
  return v;
}

}  // namespace oracle
