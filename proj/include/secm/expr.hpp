#pragma once

// Expressions in one real variable x, as typed on the command line:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := unary ('^' factor)?
//   unary   := '-' unary | primary
//   primary := number | 'x' | ident '(' expr ')' | '(' expr ')'
//
// ident is one of sqrt, ln, exp, sin, cos, atan, abs. Numbers are decimal with
// an optional exponent. There is no implicit multiplication.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "secm/quadrature.hpp"

namespace secm {

class Expr {
 public:
  enum class Kind { number, variable, negate, add, subtract, multiply, divide, power, call };

  static Expr number(double value);
  static Expr variable();
  static Expr negate(Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  /// Throws UnknownFunction (offset 0) for names outside the list.
  static Expr call(std::string_view function, Expr argument);

  Kind kind() const;
  double value() const;              // number nodes
  const std::string& function() const;  // call nodes
  const std::vector<Expr>& operands() const;

  /// Throws EvaluationFailure on division by zero, ln of a non-positive
  /// number, sqrt of a negative number, or any non-finite result.
  double evaluate(double x) const;
  RealFunction function_object() const;

  /// Fully parenthesized form that parses back to an identical tree.
  std::string print() const;

  friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws SyntaxError (with byte offset and expected tokens) or UnknownFunction.
Expr parse(std::string_view src);

inline double evaluate(const Expr& e, double x) { return e.evaluate(x); }

const std::vector<std::string>& known_functions();

}  // namespace secm
