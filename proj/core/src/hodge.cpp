#include "orbithodge/hodge.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "orbithodge/errors.hpp"
#include "orbithodge/resolution.hpp"
#include "orbithodge/timing.hpp"

namespace orbithodge {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Index of a sorted subset among all k-subsets in lex order.
class SubsetIndex {
 public:
  explicit SubsetIndex(const std::vector<std::vector<int>>& all) {
    for (std::size_t i = 0; i < all.size(); ++i) index_.emplace(all[i], static_cast<int>(i));
  }
  int operator()(const std::vector<int>& s) const { return index_.at(s); }

 private:
  std::map<std::vector<int>, int> index_;
};

// e_i ^ e_K as (sign, sorted set); sign 0 if i is in K.
std::pair<int, std::vector<int>> wedge_front(int i, const std::vector<int>& k) {
  auto pos = std::lower_bound(k.begin(), k.end(), i);
  if (pos != k.end() && *pos == i) return {0, {}};
  std::vector<int> out = k;
  const auto before = pos - k.begin();
  out.insert(out.begin() + before, i);
  return {before % 2 ? -1 : 1, out};
}

std::vector<Polynomial> homogeneous_generators(const IdealHandle& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : minimal_generators(ideal)) {
    if (!g.is_homogeneous()) throw UsageError("ideal is not homogeneous");
    gens.push_back(g);
  }
  return gens;
}

}  // namespace

HodgeDiamond HodgeDiamond::zeros(int dim) {
  if (dim < 0) throw UsageError("Hodge diamond needs a nonempty variety");
  HodgeDiamond d;
  d.dim = dim;
  const auto n = static_cast<std::size_t>(dim + 1);
  d.h.assign(n, std::vector<std::int64_t>(n, 0));
  d.source.assign(n, std::vector<CellSource>(n, CellSource::Computed));
  return d;
}

bool HodgeDiamond::symmetric() const {
  for (int p = 0; p <= dim; ++p)
    for (int q = 0; q <= dim; ++q)
      if (at(p, q) != at(q, p) || at(p, q) != at(dim - p, dim - q)) return false;
  return true;
}

bool HodgeDiamond::middle_row_zero() const {
  for (int p = 0; p <= dim; ++p)
    if (at(p, dim - p) != 0) return false;
  return true;
}

int HodgeDiamond::computed_cells() const {
  int n = 0;
  for (const auto& row : source)
    for (auto s : row) n += s == CellSource::Computed;
  return n;
}

std::string HodgeDiamond::to_text() const {
  std::size_t w = 1;
  for (const auto& row : h)
    for (auto v : row) w = std::max(w, std::to_string(v).size());
  // Odd cell width keeps every row centred on a whole column.
  if (w % 2 == 0) ++w;
  const std::size_t half = (w + 1) / 2;
  std::ostringstream os;
  for (int k = 0; k <= 2 * dim; ++k) {
    const int len = dim + 1 - std::abs(dim - k);
    std::string line(static_cast<std::size_t>(dim + 1 - len) * half, ' ');
    for (int p = std::min(k, dim), j = 0; p >= std::max(0, k - dim); --p, ++j) {
      std::string s = std::to_string(at(p, k - p));
      if (j) line += ' ';
      line += std::string(w - s.size(), ' ') + s;
    }
    os << line << '\n';
  }
  return os.str();
}

std::string HodgeDiamond::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim;
  j["hodge"] = h;
  auto prov = nlohmann::json::array();
  for (const auto& row : source) {
    auto r = nlohmann::json::array();
    for (auto s : row) r.push_back(s == CellSource::Computed ? "computed" : "symmetry-filled");
    prov.push_back(r);
  }
  j["provenance"] = prov;
  return j.dump();
}

HodgeDiamond HodgeDiamond::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    HodgeDiamond d = zeros(j.at("dim").get<int>());
    auto h = j.at("hodge").get<std::vector<std::vector<std::int64_t>>>();
    auto prov = j.at("provenance").get<std::vector<std::vector<std::string>>>();
    const auto n = static_cast<std::size_t>(d.dim + 1);
    if (h.size() != n || prov.size() != n) throw UsageError("diamond grid has the wrong size");
    for (std::size_t p = 0; p < n; ++p) {
      if (h[p].size() != n || prov[p].size() != n) throw UsageError("diamond grid has the wrong size");
      for (std::size_t q = 0; q < n; ++q) {
        if (h[p][q] < 0) throw UsageError("negative Hodge number");
        d.h[p][q] = h[p][q];
        if (prov[p][q] == "computed") d.source[p][q] = CellSource::Computed;
        else if (prov[p][q] == "symmetry-filled") d.source[p][q] = CellSource::SymmetryFilled;
        else throw UsageError("unknown provenance tag: " + prov[p][q]);
      }
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed diamond JSON: ") + e.what());
  }
}

PresentedModule cotangent_module(const IdealHandle& ideal) {
  const RingPtr& ring = ideal.ring();
  const int v = ring->nvars();
  const auto gens = homogeneous_generators(ideal);
  // K = ker((S/I)(-1)^v -> S/I): first v components of syzygies of [x | f].
  std::vector<int> src(static_cast<std::size_t>(v), 1);
  std::vector<Vec> cols;
  for (int i = 0; i < v; ++i) cols.push_back(to_vec(Polynomial::variable(ring, i)));
  for (const auto& f : gens) {
    src.push_back(f.degree());
    cols.push_back(to_vec(f));
  }
  GradedMap euler(ring, {{0}}, {src}, cols);
  GradedMap ker = syzygies(euler);
  std::vector<Vec> kgens;
  std::vector<int> ktw;
  for (std::size_t j = 0; j < ker.columns().size(); ++j) {
    Vec k;
    for (const auto& t : ker.columns()[j])
      if (t.comp < v) k.push_back(t);
    if (k.empty()) continue;
    kgens.push_back(std::move(k));
    ktw.push_back(ker.source().twists[j]);
  }
  // Relations of K / (Jacobian image): syzygies of [k | df | f e_i], cut to k.
  const int m = static_cast<int>(kgens.size());
  GradedFreeModule fv{std::vector<int>(static_cast<std::size_t>(v), 1)};
  std::vector<Vec> big = kgens;
  std::vector<int> bigtw = ktw;
  for (const auto& f : gens) {
    Vec df;
    for (int i = 0; i < v; ++i) {
      const Polynomial di = f.derivative(i);
      for (const auto& t : di.terms()) df.push_back({t.mono, i, t.coeff});
    }
    // Euler identity: sum x_i df_i = deg f * f lies in I.
    Polynomial image(ring);
    for (int i = 0; i < v; ++i) image += Polynomial::variable(ring, i) * f.derivative(i);
    if (!ideal.contains(image)) throw ConsistencyError("Jacobian row escapes the Euler kernel");
    big.push_back(std::move(df));
    bigtw.push_back(f.degree());
  }
  for (const auto& f : gens) {
    for (int i = 0; i < v; ++i) {
      Vec fe;
      for (const auto& t : f.terms()) fe.push_back({t.mono, i, t.coeff});
      big.push_back(std::move(fe));
      bigtw.push_back(f.degree() + 1);
    }
  }
  GradedMap total(ring, fv, {bigtw}, std::move(big));
  GradedMap rel = syzygies(total);
  std::vector<Vec> rcols;
  std::vector<int> rtw;
  for (std::size_t j = 0; j < rel.columns().size(); ++j) {
    Vec r;
    for (const auto& t : rel.columns()[j])
      if (t.comp < m) r.push_back(t);
    if (r.empty()) continue;
    rcols.push_back(std::move(r));
    rtw.push_back(rel.source().twists[j]);
  }
  return {GradedMap(ring, {ktw}, {rtw}, std::move(rcols)), ideal};
}

PresentedModule differential_forms_module(const IdealHandle& ideal, int p) {
  if (p < 0) throw UsageError("form degree must be non-negative");
  const RingPtr& ring = ideal.ring();
  const int v = ring->nvars();
  const auto gens = homogeneous_generators(ideal);
  if (p == 0) return PresentedModule::quotient_ring(IdealHandle(ring, gens));
  if (p + 1 > v) return {GradedMap::zero(ring, {}, {}), ideal};
  const auto& F = ring->field();
  const auto top = subsets(v, p + 1);
  SubsetIndex index(top);
  std::vector<Vec> cols;
  std::vector<int> degs;
  // Koszul: delta(e_L) for |L| = p + 2.
  for (const auto& L : subsets(v, p + 2)) {
    Vec c;
    for (std::size_t pos = 0; pos < L.size(); ++pos) {
      std::vector<int> rest = L;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      Monomial m(v);
      m.set(L[pos], 1);
      c.push_back({m, index(rest), pos % 2 ? F.neg(1) : Coeff{1}});
    }
    cols.push_back(std::move(c));
    degs.push_back(p + 2);
  }
  for (const auto& f : gens) {
    for (std::size_t J = 0; J < top.size(); ++J) {
      Vec c;
      for (const auto& t : f.terms()) c.push_back({t.mono, static_cast<int>(J), t.coeff});
      cols.push_back(std::move(c));
      degs.push_back(f.degree() + p + 1);
    }
  }
  std::vector<Polynomial> partials;
  for (const auto& f : gens) {
    partials.clear();
    for (int i = 0; i < v; ++i) partials.push_back(f.derivative(i));
    for (const auto& K : subsets(v, p)) {
      Vec c;
      for (int i = 0; i < v; ++i) {
        if (partials[static_cast<std::size_t>(i)].is_zero()) continue;
        auto [sign, J] = wedge_front(i, K);
        if (sign == 0) continue;
        const int comp = index(J);
        for (const auto& t : partials[static_cast<std::size_t>(i)].terms())
          c.push_back({t.mono, comp, sign > 0 ? t.coeff : F.neg(t.coeff)});
      }
      if (c.empty()) continue;
      cols.push_back(std::move(c));
      degs.push_back(f.degree() + p);
    }
  }
  GradedFreeModule target{std::vector<int>(top.size(), p + 1)};
  return {GradedMap(ring, std::move(target), {std::move(degs)}, std::move(cols)), ideal};
}

std::vector<std::pair<int, int>> symmetry_representatives(int dim) {
  std::set<std::pair<int, int>> reps;
  for (int p = 0; p <= dim; ++p) {
    for (int q = 0; q <= dim; ++q) {
      std::pair<int, int> best{p, q};
      for (auto c : {std::pair{q, p}, std::pair{dim - p, dim - q}, std::pair{dim - q, dim - p}}) best = std::min(best, c);
      reps.insert(best);
    }
  }
  return {reps.begin(), reps.end()};
}

HodgeCalculator::HodgeCalculator(const IdealHandle& ideal) : HodgeCalculator(ideal, invariant_report(ideal)) {}

HodgeCalculator::HodgeCalculator(const IdealHandle& ideal, const InvariantReport& report)
    : reduced_(reduce_embedding(ideal).ideal), report_(report) {
  if (!ideal.is_homogeneous()) throw UsageError("Hodge numbers need a homogeneous ideal");
}

CohomologyEngine& HodgeCalculator::engine(int p) {
  std::lock_guard lock(mutex_);
  auto& slot = engines_[p];
  if (!slot) slot = std::make_unique<CohomologyEngine>(differential_forms_module(reduced_, p));
  return *slot;
}

std::int64_t HodgeCalculator::cell(int p, int q) {
  const int d = dim();
  if (d < 0) throw UsageError("variety is empty");
  if (p < 0 || q < 0 || p > d || q > d) throw UsageError("Hodge index out of range");
  return engine(p).sheaf_dim(q, 0);
}

std::int64_t HodgeCalculator::hodge_number(int p, int q) {
  if (!report_.smooth) throw UsageError("variety is not certified smooth");
  return cell(p, q);
}

HodgeDiamond HodgeCalculator::diamond(DiamondMode mode) {
  const int d = dim();
  if (d < 0) throw UsageError("variety is empty");
  if (mode != DiamondMode::Direct && !report_.smooth)
    throw UsageError("variety is not certified smooth; use direct mode");
  HodgeDiamond out = HodgeDiamond::zeros(d);
  std::vector<std::pair<int, int>> cells;
  if (mode == DiamondMode::SymmetryFill) {
    cells = symmetry_representatives(d);
  } else {
    for (int p = 0; p <= d; ++p)
      for (int q = 0; q <= d; ++q) cells.emplace_back(p, q);
  }
  // Engines first so that parallel cells share one resolution per p.
  for (const auto& [p, q] : cells) engine(p);
  std::vector<std::int64_t> values(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next++) < cells.size();) values[i] = cell(cells[i].first, cells[i].second);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  const int threads = std::max(1, std::min<int>(thread_limit(), static_cast<int>(cells.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [p, q] = cells[i];
    out.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = values[i];
  }
  if (mode == DiamondMode::SymmetryFill) {
    for (int p = 0; p <= d; ++p) {
      for (int q = 0; q <= d; ++q) {
        std::pair<int, int> rep{p, q};
        for (auto c : {std::pair{q, p}, std::pair{d - p, d - q}, std::pair{d - q, d - p}}) rep = std::min(rep, c);
        if (rep == std::pair{p, q}) continue;
        out.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = out.at(rep.first, rep.second);
        out.source[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = CellSource::SymmetryFilled;
      }
    }
  }
  if (mode == DiamondMode::FullVerify && !out.symmetric())
    throw ConsistencyError("computed Hodge numbers violate the Hodge symmetries");
  return out;
}

std::int64_t hodge_number(const IdealHandle& ideal, int p, int q) {
  HodgeCalculator calc(ideal);
  return calc.hodge_number(p, q);
}

HodgeDiamond hodge_diamond(const IdealHandle& ideal, DiamondMode mode) {
  HodgeCalculator calc(ideal);
  return calc.diamond(mode);
}

}  // namespace orbithodge
