#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "orbithodge/graded.hpp"

namespace orbithodge::detail {

std::int64_t binomial(int a, int b);
// Position of m among the monomials of its degree in lex-descending order.
std::int64_t monomial_rank(const Monomial& m, int nvars);
// Lex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

class MonomialCache {
 public:
  explicit MonomialCache(int nvars) : nvars_(nvars) {}
  const std::vector<Monomial>& get(int d);

 private:
  int nvars_;
  std::unordered_map<int, std::vector<Monomial>> cache_;
};

/// Row numbering of the degree-d part of a free module: generator blocks in
/// order, monomials ranked inside each block.
class ComponentIndex {
 public:
  ComponentIndex(const std::vector<int>& twists, int d, int nvars) : nvars_(nvars) {
    offsets_.reserve(twists.size() + 1);
    std::int64_t off = 0;
    for (int a : twists) {
      offsets_.push_back(off);
      off += monomial_count(nvars, d - a);
    }
    offsets_.push_back(off);
  }
  std::int64_t size() const { return offsets_.back(); }
  std::int64_t block_size(int comp) const {
    return offsets_[static_cast<std::size_t>(comp) + 1] - offsets_[static_cast<std::size_t>(comp)];
  }
  std::int64_t index(int comp, const Monomial& m) const {
    return offsets_[static_cast<std::size_t>(comp)] + monomial_rank(m, nvars_);
  }

 private:
  int nvars_;
  std::vector<std::int64_t> offsets_;
};

}  // namespace orbithodge::detail
