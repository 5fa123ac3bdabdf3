#include "orbithodge/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "orbithodge/groebner.hpp"
#include "orbithodge/timing.hpp"

namespace orbithodge {

namespace {

std::mutex g_memo_mutex;
std::shared_ptr<GroebnerMemo> g_memo;

const char* kAux = "_w";

// Rewrites f into `target`, sending variable i to position pos[i].
Polynomial move_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& pos) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono[i] != 0) m.set(pos[static_cast<std::size_t>(i)], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

std::vector<Vec> compute_basis(const std::vector<Polynomial>& gens, const TermOrder& order, const PrimeField& F) {
  PhaseScope scope(Phase::Groebner);
  GroebnerEngine<PolyOrder> engine(F, PolyOrder{order}, true);
  for (const auto& g : gens) engine.add_input(to_vec(g));
  engine.run();
  return engine.reduced_basis();
}

// Runs an elimination of the first k variables of `big` and returns the
// surviving basis elements moved back into `ring` via back[i] for big's
// variable i (entries for eliminated variables are ignored).
std::vector<Polynomial> eliminate_block(const std::vector<Polynomial>& gens, const RingPtr& big, int k,
                                        const RingPtr& ring, const std::vector<int>& back) {
  // Through IdealHandle so that a configured memo also covers eliminations.
  const auto basis = IdealHandle(big, gens).groebner_basis();
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    const auto v = b.terms();
    bool free = std::all_of(v.begin(), v.end(), [&](const Term& t) {
      for (int i = 0; i < k; ++i) {
        if (t.mono[i] != 0) return false;
      }
      return true;
    });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : v) {
      Monomial m(ring->nvars());
      for (int i = k; i < big->nvars(); ++i) {
        if (t.mono[i] != 0) m.set(back[static_cast<std::size_t>(i)], t.mono[i]);
      }
      terms.push_back({m, t.coeff});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

// Ring with an auxiliary variable in front, eliminating it.
RingPtr aux_ring(const Ring& r) {
  std::vector<std::string> vars{kAux};
  vars.insert(vars.end(), r.variables().begin(), r.variables().end());
  return Ring::make(std::move(vars), r.field(), TermOrder::elimination(1));
}

std::vector<int> shift_positions(int n) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  return pos;
}

std::vector<int> unshift_positions(int n) {
  std::vector<int> back(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 1; i <= n; ++i) back[static_cast<std::size_t>(i)] = i - 1;
  return back;
}

IdealHandle from_elimination(const RingPtr& ring, std::vector<Polynomial> kept) {
  IdealHandle out(ring, kept);
  // Grevlex restricted to the surviving block is grevlex, so the kept
  // elements already form the reduced basis.
  if (ring->order().kind() == TermOrder::Kind::Grevlex) out.seed_groebner_basis(std::move(kept));
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void set_groebner_memo(std::shared_ptr<GroebnerMemo> memo) {
  std::lock_guard lock(g_memo_mutex);
  g_memo = std::move(memo);
}

std::shared_ptr<GroebnerMemo> groebner_memo() {
  std::lock_guard lock(g_memo_mutex);
  return g_memo;
}

Vec to_vec(const Polynomial& f) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mono, 0, t.coeff});
  return v;
}

Polynomial from_vec(const RingPtr& ring, const Vec& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mono, t.coeff});
  return Polynomial(ring, std::move(terms));
}

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw UsageError("ideal needs a ring");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw UsageError("generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealHandle IdealHandle::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& s : generators) gens.push_back(Polynomial::parse(ring, s));
  return IdealHandle(std::move(ring), std::move(gens));
}

std::string groebner_key(const Ring& ring, const std::vector<Polynomial>& generators) {
  std::string text;
  for (const auto& v : ring.variables()) text += v + ",";
  text += "|" + std::to_string(ring.field().modulus()) + "|" + ring.order().name() + "|";
  for (const auto& g : generators) text += g.to_string() + ";";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

namespace {

nlohmann::ordered_json ideal_document(const Ring& r, const std::vector<Polynomial>& gens) {
  nlohmann::ordered_json j;
  j["ring"]["vars"] = r.variables();
  j["ring"]["modulus"] = r.field().modulus();
  j["ring"]["order"] = r.order().name();
  if (r.homogenizer()) j["ring"]["homogenizer"] = true;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens) j["generators"].push_back(g.to_string());
  return j;
}

// Basis from a memo document, if it was written for exactly this request.
std::optional<std::vector<Polynomial>> basis_from_document(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                                           const std::string& text) {
  try {
    auto j = nlohmann::ordered_json::parse(text);
    auto expect = ideal_document(*ring, gens);
    if (j.at("ring") != expect["ring"] || j.at("generators") != expect["generators"]) return std::nullopt;
    std::vector<Polynomial> basis;
    for (const auto& s : j.at("groebner_basis")) basis.push_back(Polynomial::parse(ring, s.get<std::string>()));
    return basis;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const UsageError&) {
    return std::nullopt;
  }
}

}  // namespace

const std::vector<Polynomial>& IdealHandle::groebner_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->basis) return *cache_->basis;
  auto memo = groebner_memo();
  std::string key;
  if (memo) {
    key = groebner_key(*ring_, gens_);
    if (auto stored = memo->load(key)) {
      if (auto basis = basis_from_document(ring_, gens_, *stored)) {
        cache_->basis = std::move(*basis);
        return *cache_->basis;
      }
    }
  }
  std::vector<Polynomial> basis;
  for (const auto& v : compute_basis(gens_, ring_->order(), ring_->field())) basis.push_back(from_vec(ring_, v));
  if (memo) {
    auto doc = ideal_document(*ring_, gens_);
    doc["groebner_basis"] = nlohmann::json::array();
    for (const auto& b : basis) doc["groebner_basis"].push_back(b.to_string());
    memo->store(key, doc.dump(2));
  }
  cache_->basis = std::move(basis);
  return *cache_->basis;
}

bool IdealHandle::has_cached_basis() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->basis.has_value();
}

void IdealHandle::seed_groebner_basis(std::vector<Polynomial> basis) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = std::move(basis);
}

bool IdealHandle::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw UsageError("polynomial from a different ring");
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis(), ring_->order()).is_zero();
}

bool IdealHandle::contains(const IdealHandle& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool IdealHandle::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool IdealHandle::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& order) {
  const PolyOrder ord{order};
  const PrimeField& F = f.ring()->field();
  std::vector<Vec> divisors;
  for (const auto& b : basis) {
    if (b.is_zero()) throw UsageError("zero polynomial in division basis");
    if (!same_ring(b.ring(), f.ring())) throw UsageError("basis element from a different ring");
    Vec v = to_vec(b);
    vec::sort_terms(v, ord);
    vec::make_monic(v, F);
    divisors.push_back(std::move(v));
  }
  Vec r = to_vec(f);
  vec::sort_terms(r, ord);
  Vec rem;
  while (!r.empty()) {
    const VTerm lead = r.front();
    auto it = std::find_if(divisors.begin(), divisors.end(),
                           [&](const Vec& d) { return d.front().mono.divides(lead.mono); });
    if (it == divisors.end()) {
      rem.push_back(lead);
      r.erase(r.begin());
      continue;
    }
    r = vec::add_scaled(r, F.neg(lead.coeff), lead.mono / it->front().mono, *it, ord, F);
  }
  return from_vec(f.ring(), rem);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return normal_form(f, basis, f.ring()->order());
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const TermOrder& order) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw UsageError("generators from different rings");
  }
  std::vector<Polynomial> out;
  for (const auto& v : compute_basis(generators, order, ring->field())) out.push_back(from_vec(ring, v));
  return out;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators) {
  if (generators.empty()) return {};
  return buchberger(generators, generators.front().ring()->order());
}

std::vector<Polynomial> minimal_generators(const IdealHandle& ideal) {
  if (!ideal.is_homogeneous()) throw UsageError("minimal generators need a homogeneous ideal");
  const auto& gb = ideal.groebner_basis();
  PhaseScope scope(Phase::Groebner);
  GroebnerEngine<PolyOrder> engine(ideal.ring()->field(), PolyOrder{ideal.ring()->order()}, true);
  for (const auto& g : gb) engine.add_input(to_vec(g));
  engine.run();
  std::vector<Polynomial> out;
  for (std::size_t k : engine.essential_inputs()) out.push_back(gb[k]);
  return out;
}

bool ideal_membership(const Polynomial& f, const IdealHandle& ideal) { return ideal.contains(f); }

bool same_ideal(const IdealHandle& a, const IdealHandle& b) {
  if (!same_ring(a.ring(), b.ring())) throw UsageError("ideals from different rings");
  return a.contains(b) && b.contains(a);
}

IdealHandle eliminate(const IdealHandle& ideal, const std::vector<int>& variables) {
  const RingPtr& ring = ideal.ring();
  std::set<int> drop(variables.begin(), variables.end());
  for (int v : drop) {
    if (v < 0 || v >= ring->nvars()) throw UsageError("eliminated variable not in ring");
  }
  if (drop.empty()) return ideal;
  const int k = static_cast<int>(drop.size());
  std::vector<int> pos(static_cast<std::size_t>(ring->nvars()));
  std::vector<int> back(static_cast<std::size_t>(ring->nvars()));
  std::vector<std::string> names;
  int next = 0;
  for (int v : drop) {
    pos[static_cast<std::size_t>(v)] = next;
    back[static_cast<std::size_t>(next++)] = v;
    names.push_back(ring->variable(v));
  }
  for (int v = 0; v < ring->nvars(); ++v) {
    if (drop.count(v)) continue;
    pos[static_cast<std::size_t>(v)] = next;
    back[static_cast<std::size_t>(next++)] = v;
    names.push_back(ring->variable(v));
  }
  RingPtr big = Ring::make(names, ring->field(), TermOrder::elimination(k));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(move_vars(g, big, pos));
  PhaseScope scope(Phase::Saturation);
  return from_elimination(ring, eliminate_block(gens, big, k, ring, back));
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  const RingPtr& ring = a.ring();
  if (!same_ring(ring, b.ring())) throw UsageError("ideals from different rings");
  if (a.is_zero() || b.is_zero()) return IdealHandle(ring, {});
  RingPtr big = aux_ring(*ring);
  auto pos = shift_positions(ring->nvars());
  Polynomial w = Polynomial::variable(big, 0);
  Polynomial one_minus_w = Polynomial::constant(big, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(w * move_vars(g, big, pos));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * move_vars(g, big, pos));
  PhaseScope scope(Phase::Saturation);
  return from_elimination(ring, eliminate_block(gens, big, 1, ring, unshift_positions(ring->nvars())));
}

IdealHandle saturate(const IdealHandle& ideal, const Polynomial& g) {
  const RingPtr& ring = ideal.ring();
  if (!same_ring(ring, g.ring())) throw UsageError("saturating element from a different ring");
  if (g.is_zero()) throw UsageError("saturation by the zero ideal");
  if (g.is_constant() || ideal.is_zero()) return ideal;
  RingPtr big = aux_ring(*ring);
  auto pos = shift_positions(ring->nvars());
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(move_vars(f, big, pos));
  gens.push_back(Polynomial::variable(big, 0) * move_vars(g, big, pos) - Polynomial::constant(big, 1));
  PhaseScope scope(Phase::Saturation);
  return from_elimination(ring, eliminate_block(gens, big, 1, ring, unshift_positions(ring->nvars())));
}

IdealHandle saturate(const IdealHandle& ideal, const IdealHandle& by) {
  if (!same_ring(ideal.ring(), by.ring())) throw UsageError("ideals from different rings");
  if (by.is_zero()) throw UsageError("saturation by the zero ideal");
  PhaseScope scope(Phase::Saturation);
  std::optional<IdealHandle> acc;
  for (const auto& g : by.generators()) {
    IdealHandle part = saturate(ideal, g);
    if (!acc) {
      acc = part;
    } else if (part.contains(*acc)) {
      // acc is already contained in part
    } else if (acc->contains(part)) {
      acc = part;
    } else {
      acc = intersect(*acc, part);
    }
  }
  return *acc;
}

IdealHandle saturate(const IdealHandle& ideal) { return saturate(ideal, maximal_ideal(ideal.ring())); }

IdealHandle homogenize_ideal(const IdealHandle& ideal, int t) {
  const RingPtr& ring = ideal.ring();
  if (t < 0 || t >= ring->nvars()) throw UsageError("homogenizing variable not in ring");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.homogenize(t));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return IdealHandle(ring, std::move(gens));
}

std::string ideal_to_json(const IdealHandle& ideal, bool include_basis) {
  auto j = ideal_document(*ideal.ring(), ideal.generators());
  if (include_basis) {
    j["groebner_basis"] = nlohmann::json::array();
    for (const auto& g : ideal.groebner_basis()) j["groebner_basis"].push_back(g.to_string());
  }
  return j.dump(2);
}

IdealHandle ideal_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const auto& r = j.at("ring");
    auto vars = r.at("vars").get<std::vector<std::string>>();
    PrimeField F(r.at("modulus").get<std::uint32_t>());
    TermOrder order = TermOrder::parse(r.value("order", std::string("grevlex")));
    RingPtr ring = Ring::make(std::move(vars), F, order, r.value("homogenizer", false));
    IdealHandle ideal = IdealHandle::parse(ring, j.at("generators").get<std::vector<std::string>>());
    if (j.contains("groebner_basis")) {
      std::vector<Polynomial> basis;
      for (const auto& s : j["groebner_basis"]) basis.push_back(Polynomial::parse(ring, s.get<std::string>()));
      ideal.seed_groebner_basis(std::move(basis));
    }
    return ideal;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed ideal JSON: ") + e.what());
  }
}

}  // namespace orbithodge
