#include "orbithodge/graded.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "graded_internal.hpp"
#include "orbithodge/linalg.hpp"

namespace orbithodge {

namespace detail {

namespace {

struct BinomialTable {
  static constexpr int kSize = 96;
  std::array<std::array<std::int64_t, kSize>, kSize> c{};
  BinomialTable() {
    for (int a = 0; a < kSize; ++a) {
      c[static_cast<std::size_t>(a)][0] = 1;
      for (int b = 1; b <= a; ++b) {
        c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
            (b < a ? c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] : 0);
      }
    }
  }
};

const BinomialTable& binomials() {
  static const BinomialTable table;
  return table;
}

}  // namespace

std::int64_t binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (a >= BinomialTable::kSize) throw ComputationError("binomial coefficient out of table range");
  return binomials().c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::int64_t monomial_rank(const Monomial& m, int nvars) {
  std::int64_t idx = 0;
  int rem = m.degree();
  for (int i = 0; i + 1 < nvars; ++i) {
    int k = rem - m[i] - 1;
    if (k >= 0) idx += monomial_count(nvars - i, k);
    rem -= m[i];
  }
  return idx;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(static_cast<std::size_t>(monomial_count(nvars, d)));
  Monomial m(nvars);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

const std::vector<Monomial>& MonomialCache::get(int d) {
  auto it = cache_.find(d);
  if (it == cache_.end()) it = cache_.emplace(d, monomials_of_degree(nvars_, d)).first;
  return it->second;
}

}  // namespace detail

std::int64_t monomial_count(int nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  return detail::binomial(d + nvars - 1, nvars - 1);
}

std::int64_t GradedFreeModule::component_dimension(int d, int nvars) const {
  std::int64_t s = 0;
  for (int a : twists) s += monomial_count(nvars, d - a);
  return s;
}

GradedMap::GradedMap(RingPtr ring, GradedFreeModule target, GradedFreeModule source, std::vector<Vec> columns)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_.rank()) throw UsageError("column count must equal source rank");
  GradedModuleOrder ord{target_.twists};
  for (auto& c : columns_) {
    for (const auto& t : c) {
      if (t.comp < 0 || t.comp >= target_.rank()) throw UsageError("column entry outside the target");
      if (t.mono.nvars() != ring_->nvars()) throw UsageError("column entry from a different ring");
    }
    vec::normalize(c, ord, ring_->field());
  }
}

GradedMap GradedMap::from_entries(RingPtr ring, std::vector<int> target_twists, std::vector<int> source_twists,
                                  const std::vector<std::vector<Polynomial>>& entries) {
  if (entries.size() != target_twists.size()) throw UsageError("entry rows must match the target rank");
  std::vector<Vec> cols(source_twists.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != source_twists.size()) throw UsageError("entry columns must match the source rank");
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      const auto& e = entries[i][j];
      if (!same_ring(e.ring(), ring)) throw UsageError("entry from a different ring");
      for (const auto& t : e.terms()) cols[j].push_back({t.mono, static_cast<std::int32_t>(i), t.coeff});
    }
  }
  return GradedMap(std::move(ring), {std::move(target_twists)}, {std::move(source_twists)}, std::move(cols));
}

GradedMap GradedMap::zero(RingPtr ring, GradedFreeModule target, GradedFreeModule source) {
  std::vector<Vec> cols(static_cast<std::size_t>(source.rank()));
  return GradedMap(std::move(ring), std::move(target), std::move(source), std::move(cols));
}

GradedMap GradedMap::identity(RingPtr ring, GradedFreeModule module) {
  std::vector<Vec> cols;
  for (int i = 0; i < module.rank(); ++i) cols.push_back({{ring->one(), i, 1}});
  GradedFreeModule copy = module;
  return GradedMap(std::move(ring), std::move(module), std::move(copy), std::move(cols));
}

Polynomial GradedMap::entry(int i, int j) const {
  std::vector<Term> terms;
  for (const auto& t : columns_.at(static_cast<std::size_t>(j))) {
    if (t.comp == i) terms.push_back({t.mono, t.coeff});
  }
  return Polynomial(ring_, std::move(terms));
}

bool GradedMap::is_degree_compatible() const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& t : columns_[j]) {
      if (t.mono.degree() + target_.twists[static_cast<std::size_t>(t.comp)] != source_.twists[j]) return false;
    }
  }
  return true;
}

bool GradedMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Vec& c) { return c.empty(); });
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (!(inner.target_ == source_)) throw UsageError("composition of incompatible maps");
  const auto& F = ring_->field();
  GradedModuleOrder ord{target_.twists};
  std::vector<Vec> cols;
  for (const auto& col : inner.columns_) {
    Vec acc;
    for (const auto& t : col) {
      acc = vec::add_scaled(acc, t.coeff, t.mono, columns_[static_cast<std::size_t>(t.comp)], ord, F);
    }
    cols.push_back(std::move(acc));
  }
  return GradedMap(ring_, target_, inner.source_, std::move(cols));
}

GradedMap GradedMap::transpose() const {
  GradedFreeModule tgt, src;
  for (int a : source_.twists) tgt.twists.push_back(-a);
  for (int a : target_.twists) src.twists.push_back(-a);
  std::vector<Vec> cols(static_cast<std::size_t>(target_.rank()));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& t : columns_[j]) {
      cols[static_cast<std::size_t>(t.comp)].push_back({t.mono, static_cast<std::int32_t>(j), t.coeff});
    }
  }
  return GradedMap(ring_, std::move(tgt), std::move(src), std::move(cols));
}

PresentedModule PresentedModule::free(RingPtr ring, std::vector<int> twists) {
  GradedFreeModule f{std::move(twists)};
  return {GradedMap::zero(std::move(ring), f, {}), std::nullopt};
}

PresentedModule PresentedModule::quotient_ring(const IdealHandle& ideal) {
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw UsageError("quotient module needs a homogeneous ideal");
    cols.push_back(to_vec(g));
    degs.push_back(g.degree());
  }
  GradedMap pres(ideal.ring(), {{0}}, {std::move(degs)}, std::move(cols));
  return {std::move(pres), ideal};
}

std::vector<std::pair<int, Monomial>> graded_component_basis(const GradedFreeModule& module, int d, int nvars) {
  std::vector<std::pair<int, Monomial>> out;
  auto grevlex = TermOrder::grevlex();
  for (int i = 0; i < module.rank(); ++i) {
    auto mons = detail::monomials_of_degree(nvars, d - module.twists[static_cast<std::size_t>(i)]);
    std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) { return grevlex.cmp(a, b) > 0; });
    for (auto& m : mons) out.emplace_back(i, std::move(m));
  }
  return out;
}

std::int64_t map_rank_in_degree(const GradedMap& map, int d) {
  if (!map.is_degree_compatible()) throw UsageError("map is not degree-compatible");
  const int n = map.ring()->nvars();
  detail::ComponentIndex rows(map.target().twists, d, n);
  SparseMatrix m;
  m.rows = static_cast<std::uint32_t>(rows.size());
  detail::MonomialCache mons(n);
  for (std::size_t j = 0; j < map.columns().size(); ++j) {
    const Vec& col = map.columns()[j];
    if (col.empty()) continue;
    for (const auto& u : mons.get(d - map.source().twists[j])) {
      std::vector<SparseMatrix::Entry> c;
      c.reserve(col.size());
      for (const auto& t : col) c.push_back({static_cast<std::uint32_t>(rows.index(t.comp, t.mono * u)), t.coeff});
      m.columns.push_back(std::move(c));
    }
  }
  return sparse_rank(std::move(m), map.ring()->field());
}

std::int64_t module_dimension_in_degree(const PresentedModule& module, int d) {
  const int n = module.ring()->nvars();
  return module.generators().component_dimension(d, n) - map_rank_in_degree(module.presentation, d);
}

}  // namespace orbithodge
