#pragma once

#include <vector>

#include "qeic/rational.hpp"
#include "qeic/simplex.hpp"

namespace qeic {

// Exact Gaussian elimination helpers for small dense rational systems.

inline int rank_of(RationalMatrix m) {
  int rank = 0;
  Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, col) != 0) {
        Rational factor = m(r, col) / m(rank, col);
        for (Eigen::Index cc = col; cc < cols; ++cc) m(r, cc) -= factor * m(rank, cc);
      }
    }
    ++rank;
  }
  return rank;
}

// Basis of the null space {x : m x = 0}.
inline std::vector<RationalVector> kernel_basis(RationalMatrix m) {
  Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    Rational inv = m(rank, col);
    for (Eigen::Index cc = 0; cc < cols; ++cc) m(rank, cc) /= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != rank && m(r, col) != 0) {
        Rational factor = m(r, col);
        for (Eigen::Index cc = 0; cc < cols; ++cc) m(r, cc) -= factor * m(rank, cc);
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<RationalVector> basis;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v[free_col] = 1;
    for (Eigen::Index r = 0; r < rank; ++r) {
      v[pivot_col[static_cast<size_t>(r)]] = -m(r, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qeic
