#include "orbithodge/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace orbithodge {

std::int64_t sparse_rank(SparseMatrix m, const PrimeField& F) {
  using Entry = SparseMatrix::Entry;
  const std::uint32_t n = m.rows;
  std::vector<std::int32_t> pivot_of_row(n, -1);
  std::vector<std::vector<Entry>> pivots;
  std::vector<Coeff> acc(n, 0);
  std::vector<char> touched(n, 0);
  std::vector<std::uint32_t> touched_list;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;

  // Sparse columns first keeps the pivots short.
  std::stable_sort(m.columns.begin(), m.columns.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  auto touch = [&](std::uint32_t r) {
    if (!touched[r]) {
      touched[r] = 1;
      touched_list.push_back(r);
      heap.push(r);
    }
  };
  for (const auto& col : m.columns) {
    if (col.empty()) continue;
    for (const auto& [r, v] : col) {
      acc[r] = F.add(acc[r], v);
      touch(r);
    }
    while (!heap.empty()) {
      std::uint32_t r = heap.top();
      heap.pop();
      if (acc[r] == 0) continue;
      std::int32_t p = pivot_of_row[r];
      if (p >= 0) {
        Coeff c = acc[r];
        for (const auto& [rr, vv] : pivots[static_cast<std::size_t>(p)]) {
          acc[rr] = F.sub_mul(acc[rr], c, vv);
          touch(rr);
        }
        continue;
      }
      Coeff inv = F.inv(acc[r]);
      std::vector<Entry> piv{{r, 1}};
      while (!heap.empty()) {
        std::uint32_t s = heap.top();
        heap.pop();
        if (acc[s] != 0) piv.push_back({s, F.mul(acc[s], inv)});
      }
      pivot_of_row[r] = static_cast<std::int32_t>(pivots.size());
      pivots.push_back(std::move(piv));
    }
    for (std::uint32_t r : touched_list) {
      acc[r] = 0;
      touched[r] = 0;
    }
    touched_list.clear();
  }
  return static_cast<std::int64_t>(pivots.size());
}

std::int64_t dense_rank(std::vector<std::vector<Coeff>> rows, const PrimeField& F) {
  std::int64_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < rows.size(); ++c) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[top]);
    Coeff inv = F.inv(rows[top][c]);
    for (auto& x : rows[top]) x = F.mul(x, inv);
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      Coeff f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] = F.sub_mul(rows[r][k], f, rows[top][k]);
    }
    ++top;
    ++rank;
  }
  return rank;
}

}  // namespace orbithodge
