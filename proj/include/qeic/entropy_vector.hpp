#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "qeic/party_set.hpp"
#include "qeic/rational.hpp"

namespace qeic {

// Point in R^(2^n - 1) indexed by nonempty party subsets; entries are in bits.
// Storage is by bitmask (entry for subset S lives at S.mask - 1); presentation
// order is card-lex. Exact (rational) and float vectors are distinct types and
// never mix silently.
template <typename Scalar>
struct EntropyVector {
  int n = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;  // size 2^n - 1, index mask-1

  EntropyVector() = default;
  explicit EntropyVector(int parties)
      : n(parties), values(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero((1 << parties) - 1)) {
    if (parties < 1 || parties > kMaxParties) {
      throw std::invalid_argument("party count out of range");
    }
  }

  Eigen::Index dimension() const { return values.size(); }

  const Scalar& operator[](PartySet s) const { return values[s.mask - 1]; }
  Scalar& operator[](PartySet s) { return values[s.mask - 1]; }

  friend bool operator==(const EntropyVector& a, const EntropyVector& b) {
    return a.n == b.n && a.values == b.values;
  }
};

using ExactEntropyVector = EntropyVector<Rational>;
using RealEntropyVector = EntropyVector<double>;

// Entries in card-lex presentation order (the order used by tables and JSON).
template <typename Scalar>
std::vector<Scalar> to_card_lex(const EntropyVector<Scalar>& v) {
  const auto& order = card_lex_subsets(v.n);
  std::vector<Scalar> out;
  out.reserve(order.size());
  for (PartySet s : order) out.push_back(v[s]);
  return out;
}

template <typename Scalar>
EntropyVector<Scalar> from_card_lex(int n, const std::vector<Scalar>& entries) {
  const auto& order = card_lex_subsets(n);
  if (entries.size() != order.size()) {
    throw std::invalid_argument("entry count does not match 2^n - 1");
  }
  EntropyVector<Scalar> v(n);
  for (size_t i = 0; i < order.size(); ++i) v[order[i]] = entries[i];
  return v;
}

inline RealEntropyVector to_real(const ExactEntropyVector& v) {
  RealEntropyVector out(v.n);
  for (Eigen::Index i = 0; i < v.values.size(); ++i) out.values[i] = to_double(v.values[i]);
  return out;
}

// Permutes parties: entry for subset S of the result reads the entry for the
// preimage of S.
template <typename Scalar>
EntropyVector<Scalar> permute_parties(const EntropyVector<Scalar>& v,
                                      const std::vector<int>& perm) {
  EntropyVector<Scalar> out(v.n);
  for (uint32_t m = 1; m < (1u << v.n); ++m) {
    PartySet s(m);
    out[apply_permutation(s, perm)] = v[s];
  }
  return out;
}

}  // namespace qeic
