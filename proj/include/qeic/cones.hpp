#pragma once

#include <string>
#include <vector>

#include "qeic/entropy_vector.hpp"
#include "qeic/linear_functional.hpp"

namespace qeic {

enum class ConeKind { classical, quantum };

// Finite list of inequalities f(v) >= 0 cutting out Gamma_n (classical) or
// Sigma_n (quantum). Deduplicated after rational normalization; no zero
// functional. Redundant members are permitted: the cone, not the list, is the
// contract.
struct Cone {
  int n = 0;
  ConeKind kind = ConeKind::classical;
  std::vector<LinearFunctional> inequalities;
};

// Basic classical families: H(T) >= 0, H(X|Y) >= 0, I(X;Y) >= 0,
// I(X;Z|Y) >= 0 over all disjoint nonempty placements (marginals included).
Cone build_shannon_cone(int n);

// Quantum families: S(T) >= 0, Araki-Lieb S(X)+S(XY)-S(Y) >= 0, weak
// monotonicity S(XY)+S(XZ)-S(Y)-S(Z) >= 0, subadditivity, strong
// subadditivity. Empty conditioning reductions are covered by the smaller
// families themselves.
Cone build_von_neumann_cone(int n);

template <typename Scalar>
struct MembershipResult {
  bool member = true;
  // (index into cone.inequalities, value) for every violated inequality.
  std::vector<std::pair<int, Scalar>> violations;
};

// Exact vectors: zero tolerance.
MembershipResult<Rational> check_membership(const ExactEntropyVector& v, const Cone& c);
// Float vectors require an explicit tolerance (in bits).
MembershipResult<double> check_membership(const RealEntropyVector& v, const Cone& c,
                                          double tol);

std::vector<int> saturated_functionals(const ExactEntropyVector& v, const Cone& c);
std::vector<int> saturated_functionals(const RealEntropyVector& v, const Cone& c, double tol);

const LinearFunctional& find_inequality(const Cone& c, const std::string& tag);

}  // namespace qeic
