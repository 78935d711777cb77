#include "qeic/cones.hpp"

#include <map>
#include <stdexcept>

namespace qeic {
namespace {

// Enumerates ordered tuples of pairwise-disjoint nonempty subsets.
template <typename Fn>
void for_disjoint_pairs(int n, Fn&& fn) {
  uint32_t full = (1u << n) - 1u;
  for (uint32_t x = 1; x <= full; ++x) {
    for (uint32_t y = 1; y <= full; ++y) {
      if ((x & y) == 0) fn(PartySet(x), PartySet(y));
    }
  }
}

template <typename Fn>
void for_disjoint_triples(int n, Fn&& fn) {
  uint32_t full = (1u << n) - 1u;
  for (uint32_t x = 1; x <= full; ++x) {
    for (uint32_t y = 1; y <= full; ++y) {
      if ((x & y) != 0) continue;
      for (uint32_t z = 1; z <= full; ++z) {
        if ((z & (x | y)) == 0) fn(PartySet(x), PartySet(y), PartySet(z));
      }
    }
  }
}

class ConeBuilder {
 public:
  explicit ConeBuilder(int n) : n_(n) {}

  void add(LinearFunctional f, const std::string& tag) {
    f = normalize_functional(f);
    if (f.is_zero()) return;
    std::vector<Rational> key(f.coefficients.data(), f.coefficients.data() + f.coefficients.size());
    if (seen_.emplace(std::move(key), tag).second) {
      f.tag = tag;
      out_.push_back(std::move(f));
    }
  }

  std::vector<LinearFunctional> take() { return std::move(out_); }

 private:
  int n_;
  std::map<std::vector<Rational>, std::string> seen_;
  std::vector<LinearFunctional> out_;
};

LinearFunctional entropy_term(int n, PartySet s) {
  LinearFunctional f(n);
  f[s] += 1;
  return f;
}

std::string name(PartySet s) { return party_set_name(s); }

}  // namespace

Cone build_shannon_cone(int n) {
  if (n < 1 || n > kMaxParties) {
    throw std::invalid_argument("party count out of range (1.." +
                                std::to_string(kMaxParties) + ")");
  }
  ConeBuilder b(n);
  // H(T) >= 0
  for (PartySet t : card_lex_subsets(n)) {
    b.add(entropy_term(n, t), "H(" + name(t) + ")");
  }
  // H(X|Y) = H(XY) - H(Y) >= 0
  for_disjoint_pairs(n, [&](PartySet x, PartySet y) {
    LinearFunctional f(n);
    f[x.unite(y)] += 1;
    f[y] -= 1;
    b.add(f, "H(" + name(x) + "|" + name(y) + ")");
  });
  // I(X;Y) >= 0, symmetric
  for_disjoint_pairs(n, [&](PartySet x, PartySet y) {
    if (!card_lex_less(x, y)) return;
    LinearFunctional f(n);
    f[x] += 1;
    f[y] += 1;
    f[x.unite(y)] -= 1;
    b.add(f, "I(" + name(x) + ";" + name(y) + ")");
  });
  // I(X;Z|Y) >= 0, symmetric in X,Z
  for_disjoint_triples(n, [&](PartySet x, PartySet z, PartySet y) {
    if (!card_lex_less(x, z)) return;
    LinearFunctional f(n);
    f[x.unite(y)] += 1;
    f[y.unite(z)] += 1;
    f[x.unite(y).unite(z)] -= 1;
    f[y] -= 1;
    b.add(f, "I(" + name(x) + ";" + name(z) + "|" + name(y) + ")");
  });
  Cone c;
  c.n = n;
  c.kind = ConeKind::classical;
  c.inequalities = b.take();
  return c;
}

Cone build_von_neumann_cone(int n) {
  if (n < 1 || n > kMaxParties) {
    throw std::invalid_argument("party count out of range (1.." +
                                std::to_string(kMaxParties) + ")");
  }
  ConeBuilder b(n);
  // S(T) >= 0
  for (PartySet t : card_lex_subsets(n)) {
    b.add(entropy_term(n, t), "S(" + name(t) + ")");
  }
  // Araki-Lieb: S(X|Y) + S(X) = S(XY) - S(Y) + S(X) >= 0
  for_disjoint_pairs(n, [&](PartySet x, PartySet y) {
    LinearFunctional f(n);
    f[x.unite(y)] += 1;
    f[y] -= 1;
    f[x] += 1;
    b.add(f, "AL(" + name(x) + "|" + name(y) + ")");
  });
  // Weak monotonicity: S(X|Y) + S(X|Z) = S(XY) + S(XZ) - S(Y) - S(Z) >= 0,
  // symmetric in Y,Z
  for_disjoint_triples(n, [&](PartySet y, PartySet z, PartySet x) {
    if (!card_lex_less(y, z)) return;
    LinearFunctional f(n);
    f[x.unite(y)] += 1;
    f[x.unite(z)] += 1;
    f[y] -= 1;
    f[z] -= 1;
    b.add(f, "WM(" + name(x) + "|" + name(y) + "," + name(x) + "|" + name(z) + ")");
  });
  // Subadditivity: I(X;Y) >= 0
  for_disjoint_pairs(n, [&](PartySet x, PartySet y) {
    if (!card_lex_less(x, y)) return;
    LinearFunctional f(n);
    f[x] += 1;
    f[y] += 1;
    f[x.unite(y)] -= 1;
    b.add(f, "I(" + name(x) + ";" + name(y) + ")");
  });
  // Strong subadditivity: I(X;Z|Y) >= 0, symmetric in X,Z
  for_disjoint_triples(n, [&](PartySet x, PartySet z, PartySet y) {
    if (!card_lex_less(x, z)) return;
    LinearFunctional f(n);
    f[x.unite(y)] += 1;
    f[y.unite(z)] += 1;
    f[x.unite(y).unite(z)] -= 1;
    f[y] -= 1;
    b.add(f, "SSA(" + name(x) + ";" + name(z) + "|" + name(y) + ")");
  });
  Cone c;
  c.n = n;
  c.kind = ConeKind::quantum;
  c.inequalities = b.take();
  return c;
}

MembershipResult<Rational> check_membership(const ExactEntropyVector& v, const Cone& c) {
  MembershipResult<Rational> result;
  for (size_t i = 0; i < c.inequalities.size(); ++i) {
    Rational value = evaluate(c.inequalities[i], v);
    if (value < 0) {
      result.member = false;
      result.violations.emplace_back(static_cast<int>(i), std::move(value));
    }
  }
  return result;
}

MembershipResult<double> check_membership(const RealEntropyVector& v, const Cone& c,
                                          double tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
  MembershipResult<double> result;
  for (size_t i = 0; i < c.inequalities.size(); ++i) {
    double value = evaluate(c.inequalities[i], v);
    if (value < -tol) {
      result.member = false;
      result.violations.emplace_back(static_cast<int>(i), value);
    }
  }
  return result;
}

std::vector<int> saturated_functionals(const ExactEntropyVector& v, const Cone& c) {
  std::vector<int> out;
  for (size_t i = 0; i < c.inequalities.size(); ++i) {
    if (evaluate(c.inequalities[i], v) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> saturated_functionals(const RealEntropyVector& v, const Cone& c,
                                       double tol) {
  std::vector<int> out;
  for (size_t i = 0; i < c.inequalities.size(); ++i) {
    double value = evaluate(c.inequalities[i], v);
    if (value <= tol && value >= -tol) out.push_back(static_cast<int>(i));
  }
  return out;
}

const LinearFunctional& find_inequality(const Cone& c, const std::string& tag) {
  for (const LinearFunctional& f : c.inequalities) {
    if (f.tag == tag) return f;
  }
  throw std::invalid_argument("no inequality tagged '" + tag + "'");
}

}  // namespace qeic
