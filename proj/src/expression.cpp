#include "qeic/expression.hpp"

#include <cctype>

namespace qeic {
namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  InfoExpression parse_expr_all() {
    InfoExpression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

  Relation parse_relation_all() {
    Relation r;
    r.lhs = parse_expr();
    skip_ws();
    if (match(">=")) {
      r.kind = RelationKind::greater_equal;
    } else if (match("<=")) {
      r.kind = RelationKind::less_equal;
    } else if (match("=")) {
      r.kind = RelationKind::equal;
    } else {
      throw ParseError("expected '>=', '=' or '<='", pos_);
    }
    r.rhs = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return r;
  }

 private:
  InfoExpression parse_expr() {
    InfoExpression e;
    e.n = n_;
    skip_ws();
    bool negate = false;
    if (match("-")) negate = true;
    else match("+");
    e.terms.push_back(parse_term(negate));
    while (true) {
      skip_ws();
      if (match("+")) {
        e.terms.push_back(parse_term(false));
      } else if (peek_is_minus_term()) {
        match("-");
        e.terms.push_back(parse_term(true));
      } else {
        break;
      }
    }
    return e;
  }

  // A '-' that starts another term, as opposed to one ending the expression
  // before a relation operator.
  bool peek_is_minus_term() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == '-';
  }

  ExprTerm parse_term(bool negate) {
    skip_ws();
    Rational coeff = 1;
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      coeff = parse_rational_token();
      skip_ws();
      if (!match("*")) throw ParseError("expected '*' after coefficient", pos_);
    }
    if (negate) coeff = -coeff;
    ExprTerm term = parse_atom();
    term.coefficient = coeff;
    return term;
  }

  Rational parse_rational_token() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    size_t save = pos_;
    skip_ws();
    if (match("/")) {
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator", pos_);
      std::string den = text_.substr(dstart, pos_ - dstart);
      if (parse_rational(den) == 0) throw ParseError("zero denominator", dstart);
      return parse_rational(num + "/" + den);
    }
    pos_ = save;
    return parse_rational(num);
  }

  ExprTerm parse_atom() {
    skip_ws();
    ExprTerm term;
    term.coefficient = 1;
    if (match("S(")) {
      term.first = parse_group();
      skip_ws();
      if (match("|")) {
        term.conditioning = parse_group();
        term.kind = TermKind::conditional_entropy;
      } else {
        term.kind = TermKind::entropy;
      }
      expect(")");
    } else if (match("I(")) {
      term.first = parse_group();
      skip_ws();
      expect(";");
      term.second = parse_group();
      skip_ws();
      if (match("|")) {
        term.conditioning = parse_group();
        term.kind = TermKind::conditional_mutual_info;
      } else {
        term.kind = TermKind::mutual_info;
      }
      expect(")");
    } else {
      throw ParseError("expected 'S(' or 'I('", pos_);
    }
    check_disjoint(term);
    return term;
  }

  PartySet parse_group() {
    skip_ws();
    size_t start = pos_;
    std::string letters;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      letters.push_back(text_[pos_]);
      ++pos_;
    }
    if (letters.empty()) throw ParseError("expected party letters", pos_);
    try {
      return parse_party_set(letters, n_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  void check_disjoint(const ExprTerm& term) {
    if (!term.first.disjoint_with(term.second) ||
        !term.first.disjoint_with(term.conditioning) ||
        !term.second.disjoint_with(term.conditioning)) {
      throw ParseError("argument groups of one term must be disjoint", pos_);
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(const std::string& token) {
    skip_ws();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& token) {
    if (!match(token)) throw ParseError("expected '" + token + "'", pos_);
  }

  const std::string& text_;
  int n_;
  size_t pos_ = 0;
};

std::string term_to_string(const ExprTerm& term, bool leading) {
  std::string s;
  Rational c = term.coefficient;
  if (c < 0) {
    s += leading ? "-" : "- ";
    c = -c;
  } else if (!leading) {
    s += "+ ";
  }
  if (c != 1) s += rational_to_string(c) + "*";
  switch (term.kind) {
    case TermKind::entropy:
      s += "S(" + party_set_name(term.first) + ")";
      break;
    case TermKind::conditional_entropy:
      s += "S(" + party_set_name(term.first) + "|" + party_set_name(term.conditioning) + ")";
      break;
    case TermKind::mutual_info:
      s += "I(" + party_set_name(term.first) + ";" + party_set_name(term.second) + ")";
      break;
    case TermKind::conditional_mutual_info:
      s += "I(" + party_set_name(term.first) + ";" + party_set_name(term.second) + "|" +
           party_set_name(term.conditioning) + ")";
      break;
  }
  return s;
}

}  // namespace

InfoExpression parse_expression(const std::string& text, int n) {
  if (n < 1 || n > kMaxParties) throw std::invalid_argument("party count out of range");
  return Parser(text, n).parse_expr_all();
}

Relation parse_relation(const std::string& text, int n) {
  if (n < 1 || n > kMaxParties) throw std::invalid_argument("party count out of range");
  return Parser(text, n).parse_relation_all();
}

std::string to_string(const InfoExpression& expr) {
  std::string s;
  for (size_t i = 0; i < expr.terms.size(); ++i) {
    if (i > 0) s += " ";
    s += term_to_string(expr.terms[i], i == 0);
  }
  return s;
}

}  // namespace qeic
