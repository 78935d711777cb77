#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qeic/cones.hpp"
#include "qeic/entropy_vector.hpp"
#include "qeic/linear_functional.hpp"

namespace qeic {

// Nonnegative multipliers on cone inequalities plus free multipliers on
// equality constraints witnessing that the target is their exact
// recombination.
struct Certificate {
  std::map<std::string, Rational> lambda;  // inequality tag -> multiplier >= 0
  std::vector<Rational> mu;                // one per constraint, free sign
};

// Exact rational point in the constrained cone on which the target is
// negative; stored in primitive integer form.
struct CounterRay {
  ExactEntropyVector vector;
  Rational value;  // target evaluated on the vector, < 0
};

struct ProveResult {
  bool derivable = false;
  std::optional<Certificate> certificate;
  std::optional<CounterRay> counterray;
};

// Decides whether target >= 0 follows from the cone inequalities together
// with the equality constraints, by exact linear programming (Farkas
// alternative). Returns a verified Certificate or a verified CounterRay.
// Ties among optimal counterexample vertices are broken toward the card-lex
// lexicographically smallest normalized vector.
ProveResult prove_implication(const Cone& cone,
                              const std::vector<LinearFunctional>& constraints,
                              const LinearFunctional& target);

enum class MinimizeStatus { optimal, unbounded, empty };

struct MinimizeResult {
  MinimizeStatus status = MinimizeStatus::optimal;
  Rational optimum;
  ExactEntropyVector optimizer;  // extreme point of the normalized section
};

// Exact minimum of the objective over cone ∩ {constraints = 0} ∩
// {normalization = 1}. The normalization must be positive on cone \ {0}
// (default: sum of singleton entropies).
MinimizeResult minimize_over_cone(const Cone& cone,
                                  const std::vector<LinearFunctional>& constraints,
                                  const LinearFunctional& objective,
                                  const LinearFunctional& normalization);

LinearFunctional default_normalization(int n);

struct CertificateCheck {
  bool ok = false;
  LinearFunctional diff;  // recombination minus target; zero iff ok (with lambda >= 0)
};

// True iff the recombination reproduces the target coefficient-by-coefficient
// and every lambda is nonnegative. Exact; no tolerance.
CertificateCheck verify_certificate(const Certificate& cert, const Cone& cone,
                                    const std::vector<LinearFunctional>& constraints,
                                    const LinearFunctional& target);

}  // namespace qeic
