#include "orbithodge/groebner.hpp"

#include <algorithm>
#include <climits>

namespace orbithodge {

namespace {

struct Stream {
  const Vec* poly;
  std::size_t pos;
  Monomial mult;
  Coeff coeff;
};

struct Node {
  Monomial mono;
  int comp;
  int stream;
};

}  // namespace

template <class Order>
GroebnerEngine<Order>::GroebnerEngine(PrimeField field, Order order, bool product_criterion)
    : F_(field), ord_(std::move(order)), product_(product_criterion) {}

template <class Order>
int GroebnerEngine<Order>::sugar_of(const Vec& v) const {
  int s = INT_MIN;
  for (const auto& t : v) s = std::max(s, ord_.weight(t.mono, t.comp));
  return s;
}

template <class Order>
bool GroebnerEngine<Order>::pair_before(const Pair& a, const Pair& b) const {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = ord_.cmp(a.lcm, a.comp, b.lcm, b.comp);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

template <class Order>
void GroebnerEngine<Order>::add_input(Vec v) {
  vec::normalize(v, ord_, F_);
  std::size_t index = input_count_++;
  if (v.empty()) return;
  int s = sugar_of(v);
  if (next_input_ < inputs_.size() && inputs_.back().sugar > s) inputs_sorted_ = false;
  inputs_.push_back({std::move(v), s, index});
}

template <class Order>
bool GroebnerEngine<Order>::pending() const {
  if (next_input_ < inputs_.size()) return true;
  for (int k : heap_) {
    if (pairs_[static_cast<std::size_t>(k)].alive) return true;
  }
  return false;
}

template <class Order>
const typename GroebnerEngine<Order>::Elem* GroebnerEngine<Order>::find_reducer(const Monomial& m, int comp) const {
  if (comp < 0 || static_cast<std::size_t>(comp) >= by_comp_.size()) return nullptr;
  for (int k : by_comp_[static_cast<std::size_t>(comp)]) {
    const Elem& e = elems_[static_cast<std::size_t>(k)];
    if (e.poly.front().mono.divides(m)) return &e;
  }
  return nullptr;
}

// Johnson-style heap reduction: the running remainder is a lazy sum of
// scaled, shifted polynomial tails. Each popped term is either reduced (a new
// stream joins) or emitted.
template <class Order>
Vec GroebnerEngine<Order>::reduce_from(const Vec& f, std::size_t start) const {
  std::vector<Stream> streams;
  std::vector<Node> heap;
  Vec out;
  out.reserve(f.size());
  for (std::size_t k = 0; k < start && k < f.size(); ++k) out.push_back(f[k]);
  if (start >= f.size()) return out;
  Monomial one(f.front().mono.nvars());
  streams.push_back({&f, start, one, 1});

  auto less = [&](const Node& a, const Node& b) { return ord_.cmp(a.mono, a.comp, b.mono, b.comp) < 0; };
  auto push = [&](int s) {
    const Stream& st = streams[static_cast<std::size_t>(s)];
    const VTerm& t = (*st.poly)[st.pos];
    heap.push_back({t.mono * st.mult, t.comp, s});
    std::push_heap(heap.begin(), heap.end(), less);
  };
  push(0);
  while (!heap.empty()) {
    Monomial m = heap.front().mono;
    int comp = heap.front().comp;
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
    if (const Elem* g = find_reducer(m, comp)) {
      if (g->poly.size() > 1) {
        streams.push_back({&g->poly, 1, m / g->poly.front().mono, F_.neg(sum)});
        push(static_cast<int>(streams.size() - 1));
      }
    } else {
      out.push_back({m, comp, sum});
    }
  }
  return out;
}

template <class Order>
Vec GroebnerEngine<Order>::reduce(const Vec& f) const {
  return reduce_from(f, 0);
}

template <class Order>
void GroebnerEngine<Order>::insert(Vec h, int sugar) {
  vec::make_monic(h, F_);
  const int k = static_cast<int>(elems_.size());
  const Monomial lm = h.front().mono;
  const int comp = h.front().comp;
  if (static_cast<std::size_t>(comp) >= by_comp_.size()) by_comp_.resize(static_cast<std::size_t>(comp) + 1);
  auto& same = by_comp_[static_cast<std::size_t>(comp)];

  // Chain criterion on existing pairs.
  for (int pi : heap_) {
    Pair& p = pairs_[static_cast<std::size_t>(pi)];
    if (!p.alive || p.comp != comp || !lm.divides(p.lcm)) continue;
    const Monomial& li = elems_[static_cast<std::size_t>(p.i)].poly.front().mono;
    const Monomial& lj = elems_[static_cast<std::size_t>(p.j)].poly.front().mono;
    if (!(lcm(li, lm) == p.lcm) && !(lcm(lj, lm) == p.lcm)) p.alive = false;
  }

  struct Cand {
    int g;
    Monomial l;
    bool coprime;
    bool keep;
  };
  std::vector<Cand> cands;
  cands.reserve(same.size());
  for (int g : same) {
    const Monomial& lg = elems_[static_cast<std::size_t>(g)].poly.front().mono;
    cands.push_back({g, lcm(lg, lm), lg.coprime(lm), true});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.l.degree() < b.l.degree(); });
  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b = 0; b < cands.size() && cands[b].l.degree() <= cands[a].l.degree(); ++b) {
      if (a == b || !cands[b].l.divides(cands[a].l)) continue;
      if (!(cands[b].l == cands[a].l)) {
        cands[a].keep = false;
        break;
      }
      // Equal lcm: keep only the first, and none if any of them is coprime.
      if (product_ && cands[b].coprime) {
        cands[a].keep = false;
        break;
      }
      if (b < a) {
        cands[a].keep = false;
        break;
      }
    }
  }

  elems_.push_back({std::move(h), sugar, true});
  const Elem& e = elems_.back();
  for (const auto& c : cands) {
    if (!c.keep || (product_ && c.coprime)) continue;
    const Elem& g = elems_[static_cast<std::size_t>(c.g)];
    int sg = g.sugar + ord_.weight(c.l, comp) - ord_.weight(g.poly.front().mono, comp);
    int sh = e.sugar + ord_.weight(c.l, comp) - ord_.weight(lm, comp);
    pairs_.push_back({c.g, k, c.l, comp, std::max(sg, sh), true});
    heap_.push_back(static_cast<int>(pairs_.size() - 1));
    std::push_heap(heap_.begin(), heap_.end(), [&](int x, int y) {
      return pair_before(pairs_[static_cast<std::size_t>(y)], pairs_[static_cast<std::size_t>(x)]);
    });
  }

  // Elements whose lead is now divisible leave the reducer set.
  std::erase_if(same, [&](int g) {
    if (lm.divides(elems_[static_cast<std::size_t>(g)].poly.front().mono)) {
      elems_[static_cast<std::size_t>(g)].minimal = false;
      return true;
    }
    return false;
  });
  same.push_back(k);
}

template <class Order>
void GroebnerEngine<Order>::run(std::optional<int> degree_limit) {
  auto heap_less = [&](int x, int y) {
    return pair_before(pairs_[static_cast<std::size_t>(y)], pairs_[static_cast<std::size_t>(x)]);
  };
  if (!inputs_sorted_) {
    std::stable_sort(inputs_.begin() + static_cast<std::ptrdiff_t>(next_input_), inputs_.end(),
                     [](const Input& a, const Input& b) { return a.sugar < b.sugar; });
    inputs_sorted_ = true;
  }
  for (;;) {
    while (!heap_.empty() && !pairs_[static_cast<std::size_t>(heap_.front())].alive) {
      std::pop_heap(heap_.begin(), heap_.end(), heap_less);
      heap_.pop_back();
    }
    int dp = heap_.empty() ? INT_MAX : pairs_[static_cast<std::size_t>(heap_.front())].sugar;
    int di = next_input_ < inputs_.size() ? inputs_[next_input_].sugar : INT_MAX;
    int d = std::min(dp, di);
    if (d == INT_MAX || (degree_limit && d > *degree_limit)) break;
    if (dp <= di) {
      std::pop_heap(heap_.begin(), heap_.end(), heap_less);
      Pair p = pairs_[static_cast<std::size_t>(heap_.back())];
      pairs_[static_cast<std::size_t>(heap_.back())].alive = false;
      heap_.pop_back();
      const Vec& gi = elems_[static_cast<std::size_t>(p.i)].poly;
      const Vec& gj = elems_[static_cast<std::size_t>(p.j)].poly;
      Vec s = vec::add_scaled(Vec{}, 1, p.lcm / gi.front().mono, gi, ord_, F_, 1);
      s = vec::add_scaled(s, F_.neg(1), p.lcm / gj.front().mono, gj, ord_, F_, 1);
      Vec r = reduce(s);
      if (!r.empty()) insert(std::move(r), p.sugar);
    } else {
      Input in = std::move(inputs_[next_input_++]);
      Vec r = reduce(in.poly);
      if (!r.empty()) {
        essential_.push_back(in.index);
        insert(std::move(r), in.sugar);
      }
    }
    // Compact the pair store once most of it is dead.
    if (pairs_.size() > 4096 && heap_.size() * 2 < pairs_.size()) {
      std::vector<Pair> live;
      live.reserve(heap_.size());
      for (int k : heap_) {
        if (pairs_[static_cast<std::size_t>(k)].alive) live.push_back(pairs_[static_cast<std::size_t>(k)]);
      }
      pairs_ = std::move(live);
      heap_.resize(pairs_.size());
      for (std::size_t k = 0; k < heap_.size(); ++k) heap_[k] = static_cast<int>(k);
      std::make_heap(heap_.begin(), heap_.end(), heap_less);
    }
  }
  if (next_input_ == inputs_.size()) {
    inputs_.clear();
    next_input_ = 0;
  }
}

template <class Order>
std::vector<std::pair<Monomial, int>> GroebnerEngine<Order>::leading_terms() const {
  std::vector<std::pair<Monomial, int>> out;
  for (const auto& e : elems_) {
    if (e.minimal) out.emplace_back(e.poly.front().mono, e.poly.front().comp);
  }
  return out;
}

template <class Order>
std::vector<Vec> GroebnerEngine<Order>::reduced_basis() const {
  std::vector<Vec> out;
  for (const auto& e : elems_) {
    if (e.minimal) out.push_back(reduce_from(e.poly, 1));
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return ord_.cmp(a.front().mono, a.front().comp, b.front().mono, b.front().comp) < 0;
  });
  return out;
}

template class GroebnerEngine<PolyOrder>;
template class GroebnerEngine<GradedModuleOrder>;
template class GroebnerEngine<BlockModuleOrder>;

}  // namespace orbithodge
