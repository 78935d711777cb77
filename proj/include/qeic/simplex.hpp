#pragma once

#include <Eigen/Core>

#include "qeic/rational.hpp"

namespace qeic {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

enum class LpStatus { optimal, infeasible, unbounded };

// Exact solution of  min c.x  s.t.  A x = b, x >= 0.
//
// On optimal: x is a basic optimal solution, objective = c.x, and y holds the
// row multipliers (duals): y.A_j <= c_j for all columns, y.b = objective.
// On infeasible: y is a Farkas certificate: y.A_j <= 0 for all columns and
// y.b > 0.
struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rational objective;
  RationalVector x;
  RationalVector y;
};

// Dense two-phase tableau simplex with Bland's rule (exact rationals, no
// cycling). Redundant rows are detected in phase 1 and dropped; their
// multipliers are reported as zero.
LpResult solve_lp(const RationalMatrix& A, const RationalVector& b, const RationalVector& c);

}  // namespace qeic
