#include "orbithodge/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "orbithodge/groebner.hpp"
#include "orbithodge/linalg.hpp"
#include "orbithodge/timing.hpp"

namespace orbithodge {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// One homological degree of a Schreyer frame. Basis element k carries the
// Schreyer total monomial total[k] * e_{comp0[k]} in F_0; image[k] is its
// differential, a vector over the previous level whose lead is the frame
// term.
struct Level {
  std::vector<int> twist;
  std::vector<Monomial> total;
  std::vector<int> comp0;
  std::vector<Vec> image;
  std::vector<std::vector<int>> by_lead_comp;

  std::size_t size() const { return twist.size(); }
  void push(int tw, Monomial tot, int c0, Vec img) {
    twist.push_back(tw);
    total.push_back(std::move(tot));
    comp0.push_back(c0);
    image.push_back(std::move(img));
  }
  void index_leads(std::size_t prev_size) {
    by_lead_comp.assign(prev_size, {});
    for (std::size_t k = 0; k < image.size(); ++k) {
      by_lead_comp[static_cast<std::size_t>(image[k].front().comp)].push_back(static_cast<int>(k));
    }
  }
};

struct FramePair {
  Monomial mu;
  int k;
  Monomial nu;
  int partner;
};

class SchreyerFrame {
 public:
  SchreyerFrame(const RingPtr& ring, const GradedFreeModule& f0, std::vector<Vec> basis)
      : ord0_{f0.twists}, F_(ring->field()), nvars_(ring->nvars()) {
    Level l0;
    for (int c = 0; c < f0.rank(); ++c) l0.push(f0.twists[static_cast<std::size_t>(c)], Monomial(nvars_), c, {});
    levels.push_back(std::move(l0));
    std::stable_sort(basis.begin(), basis.end(), [](const Vec& a, const Vec& b) {
      if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
      return lex_greater(a.front().mono, b.front().mono);
    });
    Level l1;
    for (auto& g : basis) {
      const VTerm lead = g.front();
      l1.push(ord0_.weight(lead.mono, lead.comp), lead.mono, lead.comp, std::move(g));
    }
    l1.index_leads(levels[0].size());
    levels.push_back(std::move(l1));
  }

  std::vector<FramePair> next_frame() const {
    const Level& cur = levels.back();
    std::vector<FramePair> out;
    for (const auto& group : cur.by_lead_comp) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        const int k = group[a];
        const Monomial& mk = cur.image[static_cast<std::size_t>(k)].front().mono;
        std::vector<std::pair<Monomial, int>> quots;
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          const Monomial& mb = cur.image[static_cast<std::size_t>(group[b])].front().mono;
          quots.emplace_back(lcm(mk, mb) / mk, group[b]);
        }
        std::vector<std::pair<Monomial, int>> minimal;
        for (std::size_t i = 0; i < quots.size(); ++i) {
          bool redundant = false;
          for (std::size_t j = 0; j < quots.size() && !redundant; ++j) {
            if (i == j || !quots[j].first.divides(quots[i].first)) continue;
            redundant = !(quots[j].first == quots[i].first) || j < i;
          }
          if (!redundant) minimal.push_back(quots[i]);
        }
        std::stable_sort(minimal.begin(), minimal.end(),
                         [](const auto& x, const auto& y) { return lex_greater(x.first, y.first); });
        for (auto& [mu, partner] : minimal) {
          const Monomial& mp = cur.image[static_cast<std::size_t>(partner)].front().mono;
          Monomial nu = (mu * mk) / mp;
          out.push_back({mu, k, nu, partner});
        }
      }
    }
    return out;
  }

  bool extend() {
    std::vector<FramePair> frame = next_frame();
    if (frame.empty()) return false;
    const Level& cur = levels.back();
    std::vector<Vec> images(frame.size());
    const int threads = std::min<int>(thread_limit(), static_cast<int>(frame.size() / 64) + 1);
    if (threads <= 1) {
      for (std::size_t e = 0; e < frame.size(); ++e) images[e] = reduce(frame[e]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::exception_ptr error;
      std::mutex error_mutex;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          try {
            for (std::size_t e; (e = next++) < frame.size();) images[e] = reduce(frame[e]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);
    }
    Level next;
    for (std::size_t e = 0; e < frame.size(); ++e) {
      const FramePair& fp = frame[e];
      const auto k = static_cast<std::size_t>(fp.k);
      next.push(fp.mu.degree() + cur.twist[k], fp.mu * cur.total[k], cur.comp0[k], std::move(images[e]));
    }
    next.index_leads(cur.size());
    levels.push_back(std::move(next));
    return true;
  }

  std::vector<Level> levels;

 private:
  struct Stream {
    const Vec* poly;
    std::size_t pos;
    Monomial mult;
    Coeff coeff;
  };
  struct Node {
    Monomial mono;
    Monomial total;
    int comp;
    int stream;
  };

  // Lifts the S-pair mu e_k - nu e_partner to a syzygy by reducing its image
  // over the level below with the current level's images.
  Vec reduce(const FramePair& fp) const {
    const Level& cur = levels.back();
    const Level& prev = levels[levels.size() - 2];
    const Coeff minus_one = F_.neg(1);
    Vec syz{{fp.mu, fp.k, 1}, {fp.nu, fp.partner, minus_one}};
    std::vector<Stream> streams;
    std::vector<Node> heap;
    auto less = [&](const Node& a, const Node& b) {
      int c = ord0_.cmp(a.total, prev.comp0[static_cast<std::size_t>(a.comp)], b.total,
                        prev.comp0[static_cast<std::size_t>(b.comp)]);
      if (c != 0) return c < 0;
      return a.comp > b.comp;
    };
    auto push = [&](int s) {
      const Stream& st = streams[static_cast<std::size_t>(s)];
      const VTerm& t = (*st.poly)[st.pos];
      Monomial m = t.mono * st.mult;
      Monomial tot = m * prev.total[static_cast<std::size_t>(t.comp)];
      heap.push_back({m, tot, t.comp, s});
      std::push_heap(heap.begin(), heap.end(), less);
    };
    auto add_stream = [&](const Vec* p, const Monomial& mult, Coeff c) {
      if (p->size() <= 1) return;
      streams.push_back({p, 1, mult, c});
      push(static_cast<int>(streams.size() - 1));
    };
    add_stream(&cur.image[static_cast<std::size_t>(fp.k)], fp.mu, 1);
    add_stream(&cur.image[static_cast<std::size_t>(fp.partner)], fp.nu, minus_one);
    while (!heap.empty()) {
      const Monomial m = heap.front().mono;
      const int comp = heap.front().comp;
      Coeff sum = 0;
      while (!heap.empty() && heap.front().comp == comp && heap.front().mono == m) {
        std::pop_heap(heap.begin(), heap.end(), less);
        int s = heap.back().stream;
        heap.pop_back();
        Stream& st = streams[static_cast<std::size_t>(s)];
        sum = F_.add(sum, F_.mul(st.coeff, (*st.poly)[st.pos].coeff));
        if (++st.pos < st.poly->size()) push(s);
      }
      if (sum == 0) continue;
      int found = -1;
      for (int j : cur.by_lead_comp[static_cast<std::size_t>(comp)]) {
        if (cur.image[static_cast<std::size_t>(j)].front().mono.divides(m)) {
          found = j;
          break;
        }
      }
      if (found < 0) throw ConsistencyError("Schreyer reduction left a nonzero remainder");
      const Vec& g = cur.image[static_cast<std::size_t>(found)];
      Monomial q = m / g.front().mono;
      Coeff c = F_.neg(sum);
      syz.push_back({q, found, c});
      add_stream(&g, q, c);
    }
    return syz;
  }

  GradedModuleOrder ord0_;
  PrimeField F_;
  int nvars_;
};

// Ranks of the constant parts of each differential, split by twist.
BettiTable minimal_betti(const std::vector<Level>& levels, const PrimeField& F) {
  const std::size_t n = levels.size();
  // const_rank[L][a]: rank of the degree-0 part of d_L restricted to twist a.
  std::vector<std::map<int, std::int64_t>> const_rank(n + 1);
  for (std::size_t L = 1; L < n; ++L) {
    std::map<int, SparseMatrix> blocks;
    std::map<int, std::map<int, std::uint32_t>> row_ids;
    for (std::size_t k = 0; k < levels[L].size(); ++k) {
      const int a = levels[L].twist[k];
      std::vector<SparseMatrix::Entry> col;
      for (const auto& t : levels[L].image[k]) {
        if (!t.mono.is_one()) continue;
        auto& ids = row_ids[a];
        auto [it, fresh] = ids.try_emplace(t.comp, static_cast<std::uint32_t>(ids.size()));
        col.push_back({it->second, t.coeff});
      }
      if (!col.empty()) blocks[a].columns.push_back(std::move(col));
    }
    for (auto& [a, m] : blocks) {
      m.rows = static_cast<std::uint32_t>(row_ids[a].size());
      const_rank[L][a] = sparse_rank(std::move(m), F);
    }
  }
  BettiTable betti;
  for (std::size_t L = 0; L < n; ++L) {
    std::map<int, std::int64_t> step;
    for (int a : levels[L].twist) ++step[a];
    for (auto& [a, cnt] : step) {
      if (L >= 1 && const_rank[L].count(a)) cnt -= const_rank[L][a];
      if (const_rank[L + 1].count(a)) cnt -= const_rank[L + 1][a];
    }
    std::erase_if(step, [](const auto& kv) { return kv.second == 0; });
    if (step.empty() && L > 0) break;
    betti.steps.push_back(std::move(step));
  }
  return betti;
}

std::vector<int> combination_rank_key(const std::vector<int>& s) { return s; }

void subsets(int n, int p, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::int64_t> BettiTable::ranks() const {
  std::vector<std::int64_t> out;
  for (const auto& s : steps) {
    std::int64_t r = 0;
    for (const auto& [a, c] : s) r += c;
    out.push_back(r);
  }
  return out;
}

std::string BettiTable::to_text() const {
  if (steps.empty()) return "";
  int lo = 0, hi = 0;
  bool first = true;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (const auto& [a, c] : steps[i]) {
      int r = a - static_cast<int>(i);
      if (first) {
        lo = hi = r;
        first = false;
      }
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  auto total = ranks();
  std::vector<std::size_t> width(steps.size(), 1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    width[i] = std::max(width[i], std::to_string(i).size());
    width[i] = std::max(width[i], std::to_string(total[i]).size());
  }
  std::string label_pad;
  int label_w = 6;
  for (int r = lo; r <= hi; ++r) label_w = std::max<int>(label_w, static_cast<int>(std::to_string(r).size()) + 1);
  std::ostringstream os;
  auto cell = [&](std::size_t i, const std::string& s) {
    os << ' ' << std::string(width[i] - s.size(), ' ') << s;
  };
  os << std::string(static_cast<std::size_t>(label_w), ' ');
  for (std::size_t i = 0; i < steps.size(); ++i) cell(i, std::to_string(i));
  os << '\n' << std::string(static_cast<std::size_t>(label_w) - 6, ' ') << "total:";
  for (std::size_t i = 0; i < steps.size(); ++i) cell(i, std::to_string(total[i]));
  os << '\n';
  for (int r = lo; r <= hi; ++r) {
    std::string lab = std::to_string(r) + ":";
    os << std::string(static_cast<std::size_t>(label_w) - lab.size(), ' ') << lab;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto it = steps[i].find(r + static_cast<int>(i));
      cell(i, it == steps[i].end() ? "." : std::to_string(it->second));
    }
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto arr = nlohmann::json::array();
    for (const auto& [a, c] : steps[i]) arr.push_back({a, c});
    j[std::to_string(i)] = arr;
  }
  return j.dump();
}

PrunedPresentation groebner_prune(const PresentedModule& module) {
  const GradedMap& pres = module.presentation;
  if (!pres.is_degree_compatible()) throw UsageError("presentation is not degree-compatible");
  const RingPtr& ring = module.ring();
  const auto& twists = pres.target().twists;
  std::vector<Vec> gb;
  {
    PhaseScope scope(Phase::Groebner);
    GroebnerEngine<GradedModuleOrder> engine(ring->field(), GradedModuleOrder{twists}, pres.target().rank() == 1);
    for (const auto& c : pres.columns()) engine.add_input(c);
    engine.run();
    gb = engine.reduced_basis();
  }
  std::vector<bool> dropped(twists.size(), false);
  for (const auto& g : gb) {
    if (g.front().mono.is_one()) dropped[static_cast<std::size_t>(g.front().comp)] = true;
  }
  std::vector<int> remap(twists.size(), -1);
  PrunedPresentation out;
  for (std::size_t c = 0; c < twists.size(); ++c) {
    if (dropped[c]) continue;
    remap[c] = out.generators.rank();
    out.generators.twists.push_back(twists[c]);
  }
  for (auto& g : gb) {
    if (g.front().mono.is_one()) continue;
    for (auto& t : g) {
      int r = remap[static_cast<std::size_t>(t.comp)];
      if (r < 0) throw ConsistencyError("reduced basis mentions a pruned generator");
      t.comp = r;
    }
    out.basis.push_back(std::move(g));
  }
  return out;
}

PresentedModule minimal_presentation(const PresentedModule& module) {
  const RingPtr& ring = module.ring();
  PrunedPresentation pruned = groebner_prune(module);
  GradedModuleOrder ord{pruned.generators.twists};
  PhaseScope scope(Phase::Groebner);
  GroebnerEngine<GradedModuleOrder> engine(ring->field(), ord, pruned.generators.rank() == 1);
  for (const auto& g : pruned.basis) engine.add_input(g);
  engine.run();
  std::vector<std::size_t> keep = engine.essential_inputs();
  std::sort(keep.begin(), keep.end());
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (std::size_t k : keep) {
    const Vec& g = pruned.basis[k];
    degs.push_back(ord.weight(g.front().mono, g.front().comp));
    cols.push_back(g);
  }
  return {GradedMap(ring, pruned.generators, {std::move(degs)}, std::move(cols)), module.base_ideal};
}

FreeResolution free_resolution(const PresentedModule& module, std::optional<int> cap) {
  const RingPtr& ring = module.ring();
  const int limit = cap.value_or(ring->nvars());
  if (limit < 0) throw UsageError("resolution length cap must be non-negative");
  PrunedPresentation pruned = groebner_prune(module);
  PhaseScope scope(Phase::Resolution);
  FreeResolution res;
  SchreyerFrame frame(ring, pruned.generators, std::move(pruned.basis));
  if (frame.levels[1].size() == 0) frame.levels.pop_back();
  while (static_cast<int>(frame.levels.size()) - 1 < limit && frame.levels.size() > 1) {
    if (!frame.extend()) break;
  }
  if (static_cast<int>(frame.levels.size()) - 1 > limit) {
    frame.levels.resize(static_cast<std::size_t>(limit) + 1);
    res.capped = true;
  } else if (frame.levels.size() > 1 && static_cast<int>(frame.levels.size()) - 1 == limit) {
    res.capped = !frame.next_frame().empty();
  }
  res.betti = minimal_betti(frame.levels, ring->field());
  for (const auto& lv : frame.levels) res.modules.push_back({lv.twist});
  for (std::size_t L = 1; L < frame.levels.size(); ++L) {
    res.maps.emplace_back(ring, res.modules[L - 1], res.modules[L], std::move(frame.levels[L].image));
  }
  return res;
}

GradedMap syzygies(const GradedMap& phi) {
  if (!phi.is_degree_compatible()) throw UsageError("map is not degree-compatible");
  const RingPtr& ring = phi.ring();
  const int r = phi.target().rank();
  std::vector<int> twists = phi.target().twists;
  twists.insert(twists.end(), phi.source().twists.begin(), phi.source().twists.end());
  std::vector<Vec> syz;
  {
    PhaseScope scope(Phase::Groebner);
    GroebnerEngine<BlockModuleOrder> engine(ring->field(), BlockModuleOrder{r, GradedModuleOrder{twists}}, false);
    for (std::size_t j = 0; j < phi.columns().size(); ++j) {
      Vec v = phi.columns()[j];
      v.push_back({ring->one(), r + static_cast<int>(j), 1});
      engine.add_input(std::move(v));
    }
    engine.run();
    for (auto& g : engine.reduced_basis()) {
      if (g.front().comp < r) continue;
      for (auto& t : g) t.comp -= r;
      syz.push_back(std::move(g));
    }
  }
  GradedModuleOrder ord{phi.source().twists};
  GroebnerEngine<GradedModuleOrder> engine(ring->field(), ord, false);
  for (const auto& g : syz) engine.add_input(g);
  engine.run();
  std::vector<std::size_t> keep = engine.essential_inputs();
  std::sort(keep.begin(), keep.end());
  std::vector<Vec> cols;
  std::vector<int> degs;
  for (std::size_t k : keep) {
    degs.push_back(ord.weight(syz[k].front().mono, syz[k].front().comp));
    cols.push_back(syz[k]);
  }
  return GradedMap(ring, phi.source(), {std::move(degs)}, std::move(cols));
}

PresentedModule exterior_power(const PresentedModule& module, int p) {
  if (p < 0) throw UsageError("exterior power needs p >= 0");
  const RingPtr& ring = module.ring();
  if (p == 0) {
    if (module.base_ideal) return PresentedModule::quotient_ring(*module.base_ideal);
    return PresentedModule::free(ring, {0});
  }
  if (p == 1) return module;
  const GradedFreeModule& g = module.generators();
  const int n = g.rank();
  if (p > n) return {GradedMap::zero(ring, {}, {}), module.base_ideal};
  std::vector<std::vector<int>> top;
  subsets(n, p, top);
  std::map<std::vector<int>, int> index;
  std::vector<int> tw;
  for (const auto& s : top) {
    index.emplace(combination_rank_key(s), static_cast<int>(tw.size()));
    int a = 0;
    for (int i : s) a += g.twists[static_cast<std::size_t>(i)];
    tw.push_back(a);
  }
  std::vector<std::vector<int>> lower;
  subsets(n, p - 1, lower);
  const auto& F = ring->field();
  std::vector<Vec> cols;
  std::vector<int> degs;
  const auto& pres = module.presentation;
  for (std::size_t j = 0; j < pres.columns().size(); ++j) {
    for (const auto& K : lower) {
      Vec v;
      for (const auto& t : pres.columns()[j]) {
        if (std::binary_search(K.begin(), K.end(), t.comp)) continue;
        std::vector<int> J = K;
        auto pos = std::lower_bound(J.begin(), J.end(), t.comp);
        const bool odd = ((pos - J.begin()) % 2) == 1;
        J.insert(pos, t.comp);
        v.push_back({t.mono, index.at(J), odd ? F.neg(t.coeff) : t.coeff});
      }
      if (v.empty()) continue;
      int d = pres.source().twists[j];
      for (int k : K) d += g.twists[static_cast<std::size_t>(k)];
      cols.push_back(std::move(v));
      degs.push_back(d);
    }
  }
  if (module.base_ideal) {
    for (const auto& f : module.base_ideal->generators()) {
      for (std::size_t J = 0; J < top.size(); ++J) {
        Vec v;
        for (const auto& t : f.terms()) v.push_back({t.mono, static_cast<int>(J), t.coeff});
        cols.push_back(std::move(v));
        degs.push_back(f.degree() + tw[J]);
      }
    }
  }
  return {GradedMap(ring, {tw}, {std::move(degs)}, std::move(cols)), module.base_ideal};
}

}  // namespace orbithodge
