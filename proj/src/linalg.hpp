#ifndef SYMLAP_SRC_LINALG_HPP
#define SYMLAP_SRC_LINALG_HPP

// Small exact-rational linear algebra helpers shared by the core modules.

#include <stdexcept>
#include <vector>

#include "symlap/rational.hpp"

namespace symlap::detail {

using RatMatrix = std::vector<std::vector<Rat>>;

// Solves M x = b for square nonsingular M by Gaussian elimination.
inline std::vector<Rat> solve(RatMatrix m, std::vector<Rat> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("linalg: singular system");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    const Rat inv = Rat(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rat f = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

// Basis of the null space of an m x n rational matrix (row-major).
inline std::vector<std::vector<Rat>> null_space(RatMatrix m, std::size_t ncols) {
  const std::size_t nrows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && m[piv][c].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (std::size_t row = 0; row < nrows; ++row) {
      if (row == r || m[row][c].is_zero()) continue;
      const Rat f = m[row][c];
      for (std::size_t j = c; j < ncols; ++j) m[row][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(ncols);
    v[free] = Rat(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace symlap::detail

#endif
