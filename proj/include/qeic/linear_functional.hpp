#pragma once

#include <string>

#include "qeic/entropy_vector.hpp"
#include "qeic/expression.hpp"
#include "qeic/party_set.hpp"
#include "qeic/rational.hpp"

namespace qeic {

// Rational coefficient vector over nonempty party subsets; f(v) >= 0 states
// one inequality. Stored by bitmask like EntropyVector.
struct LinearFunctional {
  int n = 0;
  RationalVector coefficients;  // size 2^n - 1, index mask-1
  std::string tag;

  LinearFunctional() = default;
  explicit LinearFunctional(int parties, std::string tag_ = {})
      : n(parties), coefficients(RationalVector::Zero((1 << parties) - 1)), tag(std::move(tag_)) {}

  const Rational& operator[](PartySet s) const { return coefficients[s.mask - 1]; }
  Rational& operator[](PartySet s) { return coefficients[s.mask - 1]; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
      if (coefficients[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const LinearFunctional& a, const LinearFunctional& b) {
    return a.n == b.n && a.coefficients == b.coefficients;
  }
};

LinearFunctional compile_expression(const InfoExpression& expr);

// lhs - rhs for '>=' / '='; rhs - lhs for '<='.
LinearFunctional compile_relation(const Relation& rel);

Rational evaluate(const LinearFunctional& f, const ExactEntropyVector& v);
double evaluate(const LinearFunctional& f, const RealEntropyVector& v);

// Rewrites a functional over n+1 parties (purifier = last party) into one over
// the n base parties: S(T) with the purifier in T equals S of the complement
// within all n+1 parties on purified states; the full-set entropy is zero and
// its coefficient is dropped.
LinearFunctional purified_eliminate(const LinearFunctional& f, int purifier);

// Coprime integer coefficients with positive leading coefficient in card-lex
// order; used for deduplication and canonical comparisons.
LinearFunctional normalize_functional(const LinearFunctional& f);

// Human-readable "+S(AB) -S(B)" form in card-lex order.
std::string functional_to_string(const LinearFunctional& f);

}  // namespace qeic
