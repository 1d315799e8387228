#pragma once

#include <optional>
#include <vector>

#include "trigroup/exact.hpp"

namespace trigroup {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// In-place reduced row echelon form by exact Gauss-Jordan elimination.
/// Returns the pivot column of each pivot row, in order (size == rank).
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = Rational(1) / m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

/// Exact nullspace basis of an m x n matrix (standard free-variable basis).
inline std::vector<Vec> nullspace(Mat m, int cols) {
  if (m.empty()) m.push_back(Vec(cols, Rational(0)));
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b when the solution is unique; nullopt otherwise.
inline std::optional<Vec> solve_unique(Mat a, const Vec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int r = 0; r < rows; ++r) a[r].push_back(b[r]);
  const std::vector<int> pivots = rref(a);
  for (int c : pivots)
    if (c == cols) return std::nullopt;  // inconsistent
  if (static_cast<int>(pivots.size()) != cols) return std::nullopt;  // underdetermined
  Vec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace trigroup
