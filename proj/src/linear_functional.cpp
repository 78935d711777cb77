#include "qeic/linear_functional.hpp"

#include <stdexcept>

namespace qeic {
namespace {

void add_entropy(LinearFunctional& f, PartySet s, const Rational& coeff) {
  if (s.empty()) return;  // S(empty) = 0
  f[s] += coeff;
}

}  // namespace

LinearFunctional compile_expression(const InfoExpression& expr) {
  LinearFunctional f(expr.n);
  for (const ExprTerm& t : expr.terms) {
    const Rational& c = t.coefficient;
    PartySet x = t.first, y = t.second, u = t.conditioning;
    switch (t.kind) {
      case TermKind::entropy:
        add_entropy(f, x, c);
        break;
      case TermKind::conditional_entropy:
        // S(X|U) = S(XU) - S(U)
        add_entropy(f, x.unite(u), c);
        add_entropy(f, u, -c);
        break;
      case TermKind::mutual_info:
        // I(X;Y) = S(X) + S(Y) - S(XY)
        add_entropy(f, x, c);
        add_entropy(f, y, c);
        add_entropy(f, x.unite(y), -c);
        break;
      case TermKind::conditional_mutual_info:
        // I(X;Y|U) = S(XU) + S(UY) - S(XUY) - S(U)
        add_entropy(f, x.unite(u), c);
        add_entropy(f, u.unite(y), c);
        add_entropy(f, x.unite(u).unite(y), -c);
        add_entropy(f, u, -c);
        break;
    }
  }
  return f;
}

LinearFunctional compile_relation(const Relation& rel) {
  LinearFunctional lhs = compile_expression(rel.lhs);
  LinearFunctional rhs = compile_expression(rel.rhs);
  LinearFunctional f(lhs.n);
  if (rel.kind == RelationKind::less_equal) {
    f.coefficients = rhs.coefficients - lhs.coefficients;
  } else {
    f.coefficients = lhs.coefficients - rhs.coefficients;
  }
  return f;
}

Rational evaluate(const LinearFunctional& f, const ExactEntropyVector& v) {
  if (f.n != v.n) throw std::invalid_argument("dimension mismatch");
  return f.coefficients.dot(v.values);
}

double evaluate(const LinearFunctional& f, const RealEntropyVector& v) {
  if (f.n != v.n) throw std::invalid_argument("dimension mismatch");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.coefficients.size(); ++i) {
    if (f.coefficients[i] != 0) acc += to_double(f.coefficients[i]) * v.values[i];
  }
  return acc;
}

LinearFunctional purified_eliminate(const LinearFunctional& f, int purifier) {
  if (purifier != f.n - 1) {
    throw std::invalid_argument("purifier must be the last party");
  }
  int n_base = f.n - 1;
  if (n_base < 1) throw std::invalid_argument("no base parties left");
  LinearFunctional out(n_base, f.tag);
  for (uint32_t m = 1; m < (1u << f.n); ++m) {
    PartySet s(m);
    const Rational& c = f[s];
    if (c == 0) continue;
    PartySet image = s.contains(purifier) ? s.complement_in(f.n) : s;
    if (image.empty()) continue;  // S(full set) = 0 on pure states
    out[image] += c;
  }
  return out;
}

LinearFunctional normalize_functional(const LinearFunctional& f) {
  LinearFunctional out(f.n, f.tag);
  RationalVector primitive = primitive_integer_form(f.coefficients);
  // Sign: first nonzero coefficient in card-lex order is positive.
  for (PartySet s : card_lex_subsets(f.n)) {
    const Rational& c = primitive[s.mask - 1];
    if (c != 0) {
      if (c < 0) primitive = -primitive;
      break;
    }
  }
  out.coefficients = std::move(primitive);
  return out;
}

std::string functional_to_string(const LinearFunctional& f) {
  std::string s;
  for (PartySet subset : card_lex_subsets(f.n)) {
    const Rational& c = f[subset];
    if (c == 0) continue;
    if (!s.empty()) s += " ";
    if (c > 0) s += "+";
    if (c == -1) {
      s += "-";
    } else if (c != 1) {
      s += rational_to_string(c) + "*";
    }
    s += "S(" + party_set_name(subset) + ")";
  }
  return s.empty() ? "0" : s;
}

}  // namespace qeic
