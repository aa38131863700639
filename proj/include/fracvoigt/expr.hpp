#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace fracvoigt::expr {

struct Node;

// Immutable arithmetic expression in one free variable.
//
// Grammar, loosest binding first:
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?        right-associative
//   primary := number | name | func '(' args ')' | '(' sum ')'
//
// so -2^2 == -4 and 2^3^2 == 512.  Functions: exp log sqrt sin cos abs
// (one argument) and pow (two).  There is no implicit multiplication.
class Expr {
 public:
  // Value at x.  Throws EvaluationError on division by zero, log or sqrt
  // outside their domain, or any non-finite intermediate.
  double operator()(double x) const;

  const std::string& variable() const noexcept { return variable_; }

  // Fully parenthesised text that parses back to the same tree.
  std::string to_string() const;

 private:
  friend Expr parse(std::string_view, std::string_view);
  Expr(std::shared_ptr<const Node> root, std::string variable)
      : root_(std::move(root)), variable_(std::move(variable)) {}

  std::shared_ptr<const Node> root_;
  std::string variable_;
};

// Throws ParseError (with byte offset) on malformed input or an identifier
// other than `variable` and the known functions.
Expr parse(std::string_view source, std::string_view variable);

inline double eval(const Expr& e, double x) { return e(x); }

}  // namespace fracvoigt::expr
