#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbithodge/field.hpp"

namespace orbithodge {

/// Column-sparse matrix over a prime field.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, Coeff>;  // (row, value)

  std::uint32_t rows = 0;
  std::vector<std::vector<Entry>> columns;
};

// Exact rank by sparse elimination.
std::int64_t sparse_rank(SparseMatrix m, const PrimeField& field);

// Dense rows, for small matrices and test oracles.
std::int64_t dense_rank(std::vector<std::vector<Coeff>> rows, const PrimeField& field);

}  // namespace orbithodge
