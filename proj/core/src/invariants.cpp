#include "orbithodge/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "orbithodge/groebner.hpp"
#include "orbithodge/timing.hpp"

namespace orbithodge {

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

Series mul(const Series& a, const Series& b) {
  Series c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

Series add_shifted(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + static_cast<std::size_t>(shift)] += b[j];
  trim(a);
  return a;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); })) out.push_back(g);
  }
  gens = std::move(out);
}

// Numerator of the Hilbert series of S/(gens) over (1-T)^n.
Series numerator(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  // Pairwise coprime generators form a regular sequence.
  std::vector<int> count(static_cast<std::size_t>(nvars), 0);
  for (const auto& g : gens) {
    for (int i = 0; i < nvars; ++i) {
      if (g[i] > 0) ++count[static_cast<std::size_t>(i)];
    }
  }
  int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[static_cast<std::size_t>(x)] <= 1) {
    Series s{1};
    for (const auto& g : gens) {
      Series f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      s = mul(s, f);
    }
    return s;
  }
  std::vector<int> exps;
  int pure_limit = kMaxDegree;
  for (const auto& g : gens) {
    if (g[x] == 0) continue;
    exps.push_back(g[x]);
    if (g.degree() == g[x]) pure_limit = std::min(pure_limit, g[x] - 1);
  }
  std::sort(exps.begin(), exps.end());
  int e = std::max(1, std::min(exps[exps.size() / 2], pure_limit));
  Monomial p = Monomial::variable(nvars, x, e);
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, p));
  return add_shifted(numerator(std::move(plus), nvars), numerator(std::move(colon), nvars), e);
}

std::int64_t binomial_general(std::int64_t a, int r) {
  // a(a-1)...(a-r+1)/r!, exact for any integer a.
  std::int64_t num = 1;
  for (int i = 0; i < r; ++i) {
    num *= (a - i);
    num /= (i + 1);
  }
  return num;
}

int krull_dimension_of_leads(const std::vector<Monomial>& leads, int nvars) {
  HilbertSeries hs{numerator(leads, nvars), nvars};
  hs = hs.reduced();
  if (hs.is_zero()) return -1;
  return hs.denominator_exponent;
}

std::vector<Monomial> lead_monomials(const IdealHandle& ideal) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis()) leads.push_back(g.lead_monomial());
  return leads;
}

void require_homogeneous(const IdealHandle& ideal) {
  if (!ideal.is_homogeneous()) throw UsageError("operation needs a homogeneous ideal");
}

}  // namespace

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries out = *this;
  if (is_zero()) return out;
  for (;;) {
    if (out.denominator_exponent == 0) break;
    std::int64_t at1 = std::accumulate(out.numerator.begin(), out.numerator.end(), std::int64_t{0});
    if (at1 != 0) break;
    // Divide by (1 - T): q_k = sum_{i<=k} n_i.
    Series q(out.numerator.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < out.numerator.size(); ++k) {
      run += out.numerator[k];
      q[k] = run;
    }
    if (q.empty()) q = {0};
    trim(q);
    out.numerator = q;
    --out.denominator_exponent;
  }
  return out;
}

std::int64_t HilbertSeries::coefficient(int d) const {
  if (d < 0) return 0;
  std::int64_t s = 0;
  const int n = denominator_exponent;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i) {
    int k = d - static_cast<int>(i);
    // coefficient of T^k in (1-T)^-n is C(k+n-1, n-1)
    std::int64_t c = n == 0 ? (k == 0 ? 1 : 0) : binomial_general(k + n - 1, n - 1);
    s += numerator[i] * c;
  }
  return s;
}

bool HilbertSeries::is_zero() const {
  return std::all_of(numerator.begin(), numerator.end(), [](std::int64_t c) { return c == 0; });
}

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> generators, int nvars) {
  return {numerator(std::move(generators), nvars), nvars};
}

HilbertSeries hilbert_series(const IdealHandle& ideal) {
  require_homogeneous(ideal);
  return hilbert_series_of_monomials(lead_monomials(ideal), ideal.ring()->nvars());
}

DimensionData numerical_invariants(const IdealHandle& ideal) {
  HilbertSeries hs = hilbert_series(ideal).reduced();
  if (hs.is_zero() || hs.denominator_exponent == 0) return {-1, std::nullopt};
  std::int64_t deg = std::accumulate(hs.numerator.begin(), hs.numerator.end(), std::int64_t{0});
  return {hs.denominator_exponent - 1, deg};
}

std::int64_t euler_char_structure_sheaf(const IdealHandle& ideal) {
  HilbertSeries hs = hilbert_series(ideal).reduced();
  const int d = hs.denominator_exponent;
  if (hs.is_zero() || d == 0) return 0;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < hs.numerator.size(); ++i) {
    s += hs.numerator[i] * binomial_general(d - 1 - static_cast<std::int64_t>(i), d - 1);
  }
  return s;
}

int EmbeddingReduction::eliminated() const { return original_nvars - static_cast<int>(kept.size()); }

EmbeddingReduction reduce_embedding(const IdealHandle& ideal) {
  require_homogeneous(ideal);
  const RingPtr& ring = ideal.ring();
  const auto& gb = ideal.groebner_basis();
  std::vector<bool> drop(static_cast<std::size_t>(ring->nvars()), false);
  for (const auto& g : gb) {
    if (g.degree() != 1) continue;
    for (int i = 0; i < ring->nvars(); ++i) {
      if (g.lead_monomial()[i] == 1) drop[static_cast<std::size_t>(i)] = true;
    }
  }
  EmbeddingReduction out{ideal, {}, ring->nvars()};
  std::vector<std::string> names;
  std::vector<int> pos(static_cast<std::size_t>(ring->nvars()), -1);
  for (int i = 0; i < ring->nvars(); ++i) {
    if (drop[static_cast<std::size_t>(i)]) continue;
    pos[static_cast<std::size_t>(i)] = static_cast<int>(out.kept.size());
    out.kept.push_back(i);
    names.push_back(ring->variable(i));
  }
  if (static_cast<int>(out.kept.size()) == ring->nvars()) return out;
  bool hom = ring->homogenizer() && !drop.back();
  RingPtr small = Ring::make(names, ring->field(), ring->order(), hom);
  std::vector<Polynomial> rest;
  for (const auto& g : gb) {
    if (g.degree() == 1) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(small->nvars());
      for (int i = 0; i < ring->nvars(); ++i) {
        if (t.mono[i] != 0) m.set(pos[static_cast<std::size_t>(i)], t.mono[i]);
      }
      terms.push_back({m, t.coeff});
    }
    rest.emplace_back(small, std::move(terms));
  }
  out.ideal = IdealHandle(small, rest);
  if (ring->order().kind() == TermOrder::Kind::Grevlex) out.ideal.seed_groebner_basis(rest);
  return out;
}

int singular_locus_codim(const IdealHandle& ideal) {
  require_homogeneous(ideal);
  const int v = ideal.ring()->nvars();
  DimensionData dims = numerical_invariants(ideal);
  if (dims.proj_dim < 0) return v;
  EmbeddingReduction red = reduce_embedding(ideal);
  const RingPtr& ring = red.ideal.ring();
  const int n = ring->nvars();
  const int c = n - 1 - dims.proj_dim;
  if (c <= 0) return v;

  // The ideal I + (c x c minors) does not depend on the generating set, so
  // the minimal generators give the smallest Jacobian.
  std::vector<Polynomial> gens = minimal_generators(red.ideal);
  const int r = static_cast<int>(gens.size());
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (int j = 0; j < n; ++j) row.push_back(g.derivative(j));
    jac.push_back(std::move(row));
  }

  PhaseScope scope(Phase::Groebner);
  GroebnerEngine<PolyOrder> engine(ring->field(), PolyOrder{ring->order()}, true);
  for (const auto& g : red.ideal.groebner_basis()) engine.add_input(to_vec(g));
  engine.run();

  auto m_primary = [&]() {
    std::vector<bool> pure(static_cast<std::size_t>(n), false);
    for (const auto& [m, comp] : engine.leading_terms()) {
      if (m.is_one()) return true;
      for (int i = 0; i < n; ++i) {
        if (m[i] == m.degree()) pure[static_cast<std::size_t>(i)] = true;
      }
    }
    return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
  };

  const std::size_t batch = 128;
  std::size_t queued = 0;
  bool done = false;
  std::vector<int> rows(static_cast<std::size_t>(c));
  std::iota(rows.begin(), rows.end(), 0);
  const Polynomial one = Polynomial::constant(ring, 1);
  while (!done && r >= c) {
    // Expansion along successive rows: level k holds the k x k minors on the
    // first k chosen rows, keyed by column mask.
    std::map<std::uint32_t, Polynomial> level{{0u, one}};
    for (int k = 0; k < c && !level.empty(); ++k) {
      std::map<std::uint32_t, Polynomial> next;
      const auto& row = jac[static_cast<std::size_t>(rows[static_cast<std::size_t>(k)])];
      for (const auto& [mask, det] : level) {
        for (int j = 0; j < n; ++j) {
          if (mask & (1u << j)) continue;
          const Polynomial& a = row[static_cast<std::size_t>(j)];
          if (a.is_zero()) continue;
          // Appending column j to the sorted set: its position among the
          // k+1 columns fixes the sign of the cofactor.
          int above = std::popcount(mask >> j);
          Polynomial term = a * det;
          if ((above % 2) == 1) term = -term;
          auto [it, fresh] = next.try_emplace(mask | (1u << j), term);
          if (!fresh) it->second += term;
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      level = std::move(next);
    }
    for (const auto& [mask, det] : level) {
      engine.add_input(to_vec(det));
      if (++queued % batch == 0) {
        engine.run();
        if (m_primary()) {
          done = true;
          break;
        }
      }
    }
    // next row subset
    int i = c - 1;
    while (i >= 0 && rows[static_cast<std::size_t>(i)] == r - c + i) --i;
    if (i < 0) break;
    ++rows[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < c; ++k) rows[static_cast<std::size_t>(k)] = rows[static_cast<std::size_t>(k - 1)] + 1;
  }
  engine.run();
  if (m_primary()) return v;
  std::vector<Monomial> leads;
  for (const auto& [m, comp] : engine.leading_terms()) leads.push_back(m);
  int krull = krull_dimension_of_leads(leads, n);
  return krull < 0 ? v : v - krull;
}

std::string InvariantReport::to_json() const {
  nlohmann::ordered_json j;
  j["proj_dim"] = proj_dim;
  if (degree) {
    j["degree"] = *degree;
  } else {
    j["degree"] = nullptr;
  }
  j["sing_codim"] = sing_codim;
  j["smooth"] = smooth;
  j["ambient_dim"] = ambient_dim;
  return j.dump();
}

InvariantReport InvariantReport::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    InvariantReport r;
    r.proj_dim = j.at("proj_dim").get<int>();
    if (!j.at("degree").is_null()) r.degree = j["degree"].get<std::int64_t>();
    r.sing_codim = j.at("sing_codim").get<int>();
    r.smooth = j.at("smooth").get<bool>();
    r.ambient_dim = j.at("ambient_dim").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed invariant report: ") + e.what());
  }
}

InvariantReport invariant_report(const IdealHandle& ideal) {
  InvariantReport r;
  auto dims = numerical_invariants(ideal);
  r.proj_dim = dims.proj_dim;
  r.degree = dims.degree;
  r.ambient_dim = ideal.ring()->nvars() - 1;
  r.sing_codim = singular_locus_codim(ideal);
  r.smooth = r.sing_codim > r.ambient_dim;
  return r;
}

}  // namespace orbithodge
