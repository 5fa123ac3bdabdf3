#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbithodge/vec.hpp"

namespace orbithodge {

/// Buchberger's algorithm over free modules with a pluggable order.
///
/// Inputs are queued and consumed in order of their sugar (for homogeneous
/// input: their degree), after all S-pairs of that degree. For homogeneous
/// input this makes essential_inputs() a minimal generating subset.
/// Pair selection is by (sugar, lcm, indices); Gebauer-Moeller criteria are
/// always applied, the product criterion only when enabled (rank-one input).
template <class Order>
class GroebnerEngine {
 public:
  GroebnerEngine(PrimeField field, Order order, bool product_criterion);

  void add_input(Vec v);
  // Runs until nothing is pending, or nothing of sugar <= degree_limit is.
  void run(std::optional<int> degree_limit = std::nullopt);
  bool pending() const;
  // Reduced basis, ascending by lead term.
  std::vector<Vec> reduced_basis() const;
  // Input indices (in add_input order) that did not reduce to zero.
  const std::vector<std::size_t>& essential_inputs() const { return essential_; }
  // Leading terms of the current minimal elements.
  std::vector<std::pair<Monomial, int>> leading_terms() const;
  // Full normal form with respect to the current basis.
  Vec reduce(const Vec& f) const;
  const Order& order() const { return ord_; }
  const PrimeField& field() const { return F_; }
  std::size_t basis_size() const { return elems_.size(); }

 private:
  struct Elem {
    Vec poly;
    int sugar;
    bool minimal;
  };
  struct Pair {
    int i, j;
    Monomial lcm;
    int comp;
    int sugar;
    bool alive;
  };
  struct Input {
    Vec poly;
    int sugar;
    std::size_t index;
  };

  int sugar_of(const Vec& v) const;
  bool pair_before(const Pair& a, const Pair& b) const;
  void insert(Vec h, int sugar);
  const Elem* find_reducer(const Monomial& m, int comp) const;
  Vec reduce_from(const Vec& f, std::size_t start) const;

  PrimeField F_;
  Order ord_;
  bool product_;
  std::vector<Elem> elems_;
  std::vector<std::vector<int>> by_comp_;  // minimal elements per component
  std::vector<Pair> pairs_;
  std::vector<int> heap_;                  // indices into pairs_
  std::vector<Input> inputs_;              // sorted by sugar when consumed
  std::size_t next_input_ = 0;
  bool inputs_sorted_ = true;
  std::size_t input_count_ = 0;
  std::vector<std::size_t> essential_;
};

}  // namespace orbithodge
