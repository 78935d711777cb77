#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// Allow Matrix<mpq_class, ...> / Matrix<mpz_class, ...>.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace qeic {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
inline Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

// Canonical "p" or "p/q" form.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Scales v so entries are coprime integers; sign convention is chosen by the
// caller. Zero vectors stay zero.
inline RationalVector primitive_integer_form(const RationalVector& v) {
  Integer den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v[i].get_den().get_mpz_t());
  }
  Integer num_gcd = 0;
  std::vector<Integer> scaled(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled[static_cast<size_t>(i)] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            scaled[static_cast<size_t>(i)].get_mpz_t());
  }
  RationalVector out(v.size());
  if (num_gcd == 0) {
    out.setConstant(v.size(), Rational(0));
    return out;
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[i] = Rational(scaled[static_cast<size_t>(i)] / num_gcd);
  }
  return out;
}

// Primitive integer form with the first nonzero entry positive.
inline RationalVector normalized_direction(const RationalVector& v) {
  RationalVector out = primitive_integer_form(v);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] != 0) {
      if (out[i] < 0) out = -out;
      break;
    }
  }
  return out;
}

inline bool lexicographically_less(const RationalVector& a, const RationalVector& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace qeic
