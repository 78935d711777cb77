#include "qeic/prover.hpp"

#include <set>
#include <stdexcept>

#include "qeic/simplex.hpp"

namespace qeic {
namespace {

void check_shapes(const Cone& cone, const std::vector<LinearFunctional>& constraints,
                  const LinearFunctional& target) {
  for (const LinearFunctional& f : cone.inequalities) {
    if (f.n != target.n) throw std::invalid_argument("cone/target dimension mismatch");
  }
  for (const LinearFunctional& g : constraints) {
    if (g.n != target.n) throw std::invalid_argument("constraint/target dimension mismatch");
  }
  std::set<std::string> tags;
  for (const LinearFunctional& f : cone.inequalities) {
    if (!tags.insert(f.tag).second) {
      throw std::invalid_argument("duplicate inequality tag '" + f.tag + "'");
    }
  }
}

// Columns of the recombination system: cone rows, then (+g, -g) per
// constraint, then optional (+nu, -nu).
RationalMatrix recombination_columns(Eigen::Index d, const Cone& cone,
                                     const std::vector<LinearFunctional>& constraints,
                                     const LinearFunctional* normalization) {
  Eigen::Index cols = static_cast<Eigen::Index>(cone.inequalities.size()) +
                      2 * static_cast<Eigen::Index>(constraints.size()) +
                      (normalization ? 2 : 0);
  RationalMatrix a = RationalMatrix::Zero(d, cols);
  Eigen::Index col = 0;
  for (const LinearFunctional& f : cone.inequalities) a.col(col++) = f.coefficients;
  for (const LinearFunctional& g : constraints) {
    a.col(col++) = g.coefficients;
    a.col(col++) = -g.coefficients;
  }
  if (normalization) {
    a.col(col++) = normalization->coefficients;
    a.col(col++) = -normalization->coefficients;
  }
  return a;
}

Certificate extract_certificate(const Cone& cone,
                                const std::vector<LinearFunctional>& constraints,
                                const RationalVector& x) {
  Certificate cert;
  size_t m = cone.inequalities.size();
  for (size_t j = 0; j < m; ++j) {
    if (x[static_cast<Eigen::Index>(j)] != 0) {
      cert.lambda[cone.inequalities[j].tag] = x[static_cast<Eigen::Index>(j)];
    }
  }
  cert.mu.reserve(constraints.size());
  for (size_t i = 0; i < constraints.size(); ++i) {
    Eigen::Index base = static_cast<Eigen::Index>(m + 2 * i);
    cert.mu.push_back(x[base] - x[base + 1]);
  }
  return cert;
}

struct SectionLp {
  LpStatus status = LpStatus::optimal;
  Rational optimum;      // min of objective over the section
  RationalVector point;  // attaining vertex (section coordinates)
};

// min objective.x over {x : cone >= 0, constraints = 0, extra_eqs = 0,
// normalization.x = 1}, solved through the dual
//   max w  s.t.  objective = B^T lambda + G^T mu + E^T eta + w nu,  lambda >= 0.
// The primal optimizer is read off the dual row multipliers.
SectionLp section_minimize(const Cone& cone, const std::vector<LinearFunctional>& constraints,
                           const std::vector<LinearFunctional>& extra_eqs,
                           const LinearFunctional& objective,
                           const LinearFunctional& normalization) {
  std::vector<LinearFunctional> eqs = constraints;
  eqs.insert(eqs.end(), extra_eqs.begin(), extra_eqs.end());
  RationalMatrix a = recombination_columns(objective.coefficients.size(), cone, eqs,
                                           &normalization);
  Eigen::Index cols = a.cols();
  RationalVector c = RationalVector::Zero(cols);
  c[cols - 2] = -1;  // maximize w
  c[cols - 1] = 1;
  LpResult lp = solve_lp(a, objective.coefficients, c);

  SectionLp out;
  if (lp.status != LpStatus::optimal) {
    out.status = lp.status;
    return out;
  }
  out.status = LpStatus::optimal;
  out.optimum = -lp.objective;  // w* = -(min -w)
  out.point = -lp.y;
  return out;
}

ExactEntropyVector to_entropy_vector(int n, const RationalVector& coords) {
  ExactEntropyVector v(n);
  v.values = coords;
  return v;
}

}  // namespace

LinearFunctional default_normalization(int n) {
  LinearFunctional nu(n, "normalization");
  for (int i = 0; i < n; ++i) nu[PartySet(1u << i)] = 1;
  return nu;
}

MinimizeResult minimize_over_cone(const Cone& cone,
                                  const std::vector<LinearFunctional>& constraints,
                                  const LinearFunctional& objective,
                                  const LinearFunctional& normalization) {
  check_shapes(cone, constraints, objective);
  MinimizeResult result;
  SectionLp lp = section_minimize(cone, constraints, {}, objective, normalization);
  if (lp.status == LpStatus::optimal) {
    result.status = MinimizeStatus::optimal;
    result.optimum = lp.optimum;
    result.optimizer = to_entropy_vector(objective.n, lp.point);
    return result;
  }
  if (lp.status == LpStatus::unbounded) {
    // Dual unbounded: the section is empty.
    result.status = MinimizeStatus::empty;
    return result;
  }
  // Dual infeasible: either the primal is unbounded below or the section is
  // empty; the section is empty iff -normalization is derivable.
  RationalMatrix a = recombination_columns(normalization.coefficients.size(), cone,
                                           constraints, nullptr);
  RationalVector zero_cost = RationalVector::Zero(a.cols());
  LpResult feas = solve_lp(a, -normalization.coefficients, zero_cost);
  result.status =
      feas.status == LpStatus::optimal ? MinimizeStatus::empty : MinimizeStatus::unbounded;
  return result;
}

ProveResult prove_implication(const Cone& cone,
                              const std::vector<LinearFunctional>& constraints,
                              const LinearFunctional& target) {
  check_shapes(cone, constraints, target);
  ProveResult result;

  RationalMatrix a = recombination_columns(target.coefficients.size(), cone, constraints,
                                           nullptr);
  RationalVector zero_cost = RationalVector::Zero(a.cols());
  LpResult lp = solve_lp(a, target.coefficients, zero_cost);

  if (lp.status == LpStatus::optimal) {
    result.derivable = true;
    result.certificate = extract_certificate(cone, constraints, lp.x);
    CertificateCheck check = verify_certificate(*result.certificate, cone, constraints, target);
    if (!check.ok) throw std::logic_error("prover produced an invalid certificate");
    return result;
  }

  // Not derivable: find a separating point, preferring the card-lex smallest
  // optimal vertex of the normalized section.
  result.derivable = false;
  LinearFunctional nu = default_normalization(target.n);
  RationalVector witness;
  SectionLp best = section_minimize(cone, constraints, {}, target, nu);
  if (best.status == LpStatus::optimal && best.optimum < 0) {
    std::vector<LinearFunctional> pinned;
    LinearFunctional target_at_opt = target;
    target_at_opt.coefficients -= best.optimum * nu.coefficients;
    pinned.push_back(target_at_opt);  // target.x = optimum on the section
    RationalVector point = best.point;
    for (PartySet s : card_lex_subsets(target.n)) {
      LinearFunctional coordinate(target.n);
      coordinate[s] = 1;
      SectionLp step = section_minimize(cone, constraints, pinned, coordinate, nu);
      if (step.status != LpStatus::optimal) break;
      point = step.point;
      LinearFunctional pin = coordinate;
      pin.coefficients -= step.optimum * nu.coefficients;
      pinned.push_back(pin);
    }
    witness = point;
  } else {
    // Fall back to the raw Farkas certificate of the recombination system.
    witness = -lp.y;
  }

  CounterRay ray;
  ray.vector = to_entropy_vector(target.n, primitive_integer_form(witness));
  ray.value = evaluate(target, ray.vector);

  // Soundness: exact cone membership, exact constraint satisfaction,
  // strictly negative target.
  if (!check_membership(ray.vector, cone).member) {
    throw std::logic_error("counterexample violates the cone");
  }
  for (const LinearFunctional& g : constraints) {
    if (evaluate(g, ray.vector) != 0) {
      throw std::logic_error("counterexample violates a constraint");
    }
  }
  if (ray.value >= 0) throw std::logic_error("counterexample does not violate the target");
  result.counterray = std::move(ray);
  return result;
}

CertificateCheck verify_certificate(const Certificate& cert, const Cone& cone,
                                    const std::vector<LinearFunctional>& constraints,
                                    const LinearFunctional& target) {
  CertificateCheck check;
  check.diff = LinearFunctional(target.n);
  bool lambdas_ok = true;
  for (const auto& [tag, value] : cert.lambda) {
    if (value < 0) lambdas_ok = false;
    check.diff.coefficients += value * find_inequality(cone, tag).coefficients;
  }
  if (cert.mu.size() != constraints.size()) {
    throw std::invalid_argument("certificate has wrong number of constraint multipliers");
  }
  for (size_t i = 0; i < constraints.size(); ++i) {
    check.diff.coefficients += cert.mu[i] * constraints[i].coefficients;
  }
  check.diff.coefficients -= target.coefficients;
  check.ok = lambdas_ok && check.diff.is_zero();
  return check;
}

}  // namespace qeic
