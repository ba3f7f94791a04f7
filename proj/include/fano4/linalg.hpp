#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fano4::linalg {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form over an exact field. Returns the pivot columns.
template <typename T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == T(0)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const T inv = T(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == T(0)) continue;
      const T f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
std::size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

/// Basis of { x : m x = 0 }.
template <typename T>
Matrix<T> kernel(Matrix<T> m, std::size_t cols) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix<T> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fano4::linalg
