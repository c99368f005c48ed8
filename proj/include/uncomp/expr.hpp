#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "uncomp/interval.hpp"

namespace uncomp {

// p/q in lowest terms, q > 0.
struct Rational {
  long long num = 0;
  long long den = 1;
  static Rational make(long long p, long long q);
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Immutable expression over rationals, pi, variables x1..xn, sin, exp,
// closed under +, * and composition.  There is no subtraction or
// division; negative numbers enter only as rational constants.
class Expr {
 public:
  enum class Kind { Rational, Pi, Var, Add, Mul, Sin, Exp };

  static Expr rational(long long p, long long q = 1);
  static Expr pi();
  static Expr var(int index);  // 1-based
  static Expr add(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr sin(Expr a);
  static Expr exp(Expr a);

  Kind kind() const;
  const Rational& rational_value() const;
  int var_index() const;
  const Expr& lhs() const;  // Add, Mul
  const Expr& rhs() const;  // Add, Mul
  const Expr& arg() const;  // Sin, Exp

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar (whitespace ignored):
//   expr    = term { "+" term } ;
//   term    = factor { "*" factor } ;
//   factor  = rational | "pi" | var | ("sin" | "exp") "(" expr ")" | "(" expr ")" ;
//   rational= [ "-" ] digits [ "/" digits ] ;
//   var     = "x" digits ;            (index 1..arity)
// Throws ParseError carrying the 0-based character offset.
Expr parse_expr(std::string_view text, int arity = 1);

// Minimal-parenthesis rendering; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

// Largest variable index used (0 for closed expressions).
int max_var(const Expr& e);

std::size_t node_count(const Expr& e);

// Replaces every occurrence of x_var by g.  Throws DomainError unless
// 1 <= var <= arity and both e and g use only x1..x_arity.
Expr substitute(const Expr& e, int var, const Expr& g, int arity = 1);

// Outward-rounded enclosure of e over the box (one interval per variable).
Interval eval_interval(const Expr& e, std::span<const Interval> box);
Interval eval_interval(const Expr& e, const Interval& x1);

double eval_point(const Expr& e, std::span<const double> point);
double eval_point(const Expr& e, double x1);

// Enclosures of e and de/dx1 over x1 (forward-mode differentiation on
// intervals).  Throws DomainError if e uses a variable other than x1.
struct IntervalJet {
  Interval value;
  Interval derivative;
};
IntervalJet eval_jet(const Expr& e, const Interval& x1);

}  // namespace uncomp
