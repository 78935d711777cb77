#include "qeic/simplex.hpp"

#include <stdexcept>
#include <vector>

namespace qeic {
namespace {

// Tableau rows 0..m-1 hold [A | artificials | rhs]; row m holds reduced costs
// and -objective in the rhs slot. Basis tracks the basic column of each row.
struct Tableau {
  RationalMatrix t;
  std::vector<Eigen::Index> basis;
  Eigen::Index rows, structural;

  Eigen::Index rhs_col() const { return t.cols() - 1; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    Rational inv = t(row, col);
    for (Eigen::Index c = 0; c < t.cols(); ++c) t(row, c) /= inv;
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      if (r == row || t(r, col) == 0) continue;
      Rational factor = t(r, col);
      for (Eigen::Index c = 0; c < t.cols(); ++c) t(r, c) -= factor * t(row, c);
    }
    basis[static_cast<size_t>(row)] = col;
  }

  // Bland's rule; `allowed` limits entering columns. Returns false when a
  // column with negative reduced cost has no positive entry (unbounded).
  bool run(const std::vector<bool>& allowed) {
    Eigen::Index cost_row = rows;
    while (true) {
      Eigen::Index entering = -1;
      for (Eigen::Index c = 0; c < rhs_col(); ++c) {
        if (allowed[static_cast<size_t>(c)] && t(cost_row, c) < 0) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;
      Eigen::Index leaving = -1;
      Rational best_ratio;
      for (Eigen::Index r = 0; r < rows; ++r) {
        if (t(r, entering) <= 0) continue;
        Rational ratio = t(r, rhs_col()) / t(r, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leaving)])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpResult solve_lp(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("LP shape mismatch");

  // Sign-normalize rows so the rhs is nonnegative; remember the flips to map
  // row multipliers back to the caller's orientation.
  std::vector<int> row_sign(static_cast<size_t>(m), 1);
  Tableau tab;
  tab.rows = m;
  tab.structural = n;
  tab.t = RationalMatrix::Zero(m + 1, n + m + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    int sign = b[r] < 0 ? -1 : 1;
    row_sign[static_cast<size_t>(r)] = sign;
    for (Eigen::Index col = 0; col < n; ++col) tab.t(r, col) = sign * A(r, col);
    tab.t(r, n + r) = 1;
    tab.t(r, tab.rhs_col()) = sign * b[r];
  }
  tab.basis.resize(static_cast<size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) tab.basis[static_cast<size_t>(r)] = n + r;

  // Phase 1: minimize the sum of artificials. Reduced costs start at
  // 0 - sum of rows for structural columns, 0 for artificials.
  for (Eigen::Index col = 0; col <= tab.rhs_col(); ++col) {
    Rational sum = 0;
    for (Eigen::Index r = 0; r < m; ++r) sum += tab.t(r, col);
    if (col < n || col == tab.rhs_col()) {
      tab.t(m, col) = -sum;
    } else {
      tab.t(m, col) = 0;
    }
  }
  std::vector<bool> allow_all(static_cast<size_t>(n + m), true);
  if (!tab.run(allow_all)) {
    throw std::logic_error("phase 1 cannot be unbounded");
  }

  LpResult result;
  Rational phase1 = -tab.t(m, tab.rhs_col());
  if (phase1 > 0) {
    // Infeasible. Row multipliers y: reduced cost of artificial i is
    // 1 - y_i, so y_i = 1 - rc(a_i); undo the row sign flips.
    result.status = LpStatus::infeasible;
    result.y = RationalVector::Zero(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      // Reduced cost of artificial r is 1 - y_r.
      result.y[r] = row_sign[static_cast<size_t>(r)] * (Rational(1) - tab.t(m, n + r));
    }
    return result;
  }

  // Drive basic artificials out; rows that cannot pivot on a structural
  // column are redundant and get dropped.
  std::vector<bool> row_alive(static_cast<size_t>(m), true);
  for (Eigen::Index r = 0; r < m; ++r) {
    if (tab.basis[static_cast<size_t>(r)] < n) continue;
    Eigen::Index col = -1;
    for (Eigen::Index cc = 0; cc < n; ++cc) {
      if (tab.t(r, cc) != 0) {
        col = cc;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(r, col);
    } else {
      row_alive[static_cast<size_t>(r)] = false;
    }
  }

  // Phase 2: rebuild the cost row for c over the current basis. Dead rows and
  // artificial columns are excluded from pivoting.
  for (Eigen::Index col = 0; col <= tab.rhs_col(); ++col) {
    Rational value = (col < n) ? c[col] : Rational(0);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (!row_alive[static_cast<size_t>(r)]) continue;
      Eigen::Index bc = tab.basis[static_cast<size_t>(r)];
      Rational cost = (bc < n) ? c[bc] : Rational(0);
      if (cost != 0) value -= cost * tab.t(r, col);
    }
    tab.t(m, col) = value;
  }
  // Dead rows keep their artificial basic at zero; clear them so they can
  // never be selected by the ratio test or touched by later pivots.
  for (Eigen::Index r = 0; r < m; ++r) {
    if (!row_alive[static_cast<size_t>(r)]) {
      for (Eigen::Index col = 0; col <= tab.rhs_col(); ++col) {
        if (col != tab.basis[static_cast<size_t>(r)]) tab.t(r, col) = 0;
      }
    }
  }
  std::vector<bool> allow_structural(static_cast<size_t>(n + m), false);
  for (Eigen::Index col = 0; col < n; ++col) allow_structural[static_cast<size_t>(col)] = true;
  if (!tab.run(allow_structural)) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.x = RationalVector::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    Eigen::Index bc = tab.basis[static_cast<size_t>(r)];
    if (bc < n) result.x[bc] = tab.t(r, tab.rhs_col());
  }
  result.objective = c.dot(result.x);
  // Duals: phase-2 reduced cost of artificial i is -y_i (its cost is 0).
  result.y = RationalVector::Zero(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    if (!row_alive[static_cast<size_t>(r)]) continue;  // redundant row: y = 0
    result.y[r] = row_sign[static_cast<size_t>(r)] * (-tab.t(m, n + r));
  }
  return result;
}

}  // namespace qeic
