#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qeic/party_set.hpp"
#include "qeic/rational.hpp"

namespace qeic {

// Grammar (whitespace insignificant):
//   relation := expr ('>='|'='|'<=') expr
//   expr     := term (('+'|'-') term)*
//   term     := [rational '*'] atom
//   atom     := 'S(' group ['|' group] ')' | 'I(' group ';' group ['|' group] ')'
//   group    := letter+
//   rational := int ['/' int]

enum class TermKind { entropy, conditional_entropy, mutual_info, conditional_mutual_info };

struct ExprTerm {
  TermKind kind;
  Rational coefficient;
  PartySet first;        // S(first | cond), I(first ; second | cond)
  PartySet second;       // empty unless mutual-information form
  PartySet conditioning; // may be empty
};

struct InfoExpression {
  int n = 0;
  std::vector<ExprTerm> terms;
};

enum class RelationKind { greater_equal, equal, less_equal };

struct Relation {
  InfoExpression lhs;
  InfoExpression rhs;
  RelationKind kind;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

InfoExpression parse_expression(const std::string& text, int n);
Relation parse_relation(const std::string& text, int n);

// Canonical text; parse(print(e)) reproduces the term list exactly.
std::string to_string(const InfoExpression& expr);

}  // namespace qeic
