#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uncomp/delta1.hpp"

namespace uncomp {

enum class Builtin {
  One,      // 1
  Cauchy,   // 1 / (y^2 + 1)
  GaussSq,  // exp(y^2)
};

struct BoundaryFunction;

struct Delta1Fn {
  Expr g;  // f = G
};
struct Reciprocal2 {
  Expr g;  // f = G^-2
};
struct CauchyReciprocal2 {
  Expr g;  // f = (y^2 + 1)^-1 G^-2
};
struct LinearTerm {
  double coef;
  std::shared_ptr<const BoundaryFunction> f;
};
struct Linear {
  std::vector<LinearTerm> terms;
};

struct BoundaryFunction {
  std::variant<Builtin, Delta1Fn, Reciprocal2, CauchyReciprocal2, Linear> v;
};

// Accepted forms:
//   one | cauchy | gauss_sq
//   recip2:<expr>          f = G^-2
//   cauchy-recip2:<expr>   f = (y^2+1)^-1 G^-2
//   combo:<c>*<name>+...   linear combination of builtins, e.g. combo:2*one+-1*cauchy
//   <expr>                 f = G
BoundaryFunction parse_boundary(std::string_view text);
std::string to_string(const BoundaryFunction& f);

double eval_boundary(const BoundaryFunction& f, double y);
// Enclosure over y; Interval::entire() where no bound is available.
Interval enclose_boundary(const BoundaryFunction& f, const Interval& y);

struct Value {
  double estimate = 0.0;
  double error_bound = 0.0;
  std::optional<double> normalized_estimate;  // electro only, when checked
  std::size_t panels = 0;
};

using EvalOutcome = std::variant<Value, Divergent, Unknown>;

constexpr double kDefaultTol = 1e-6;
constexpr std::size_t kDefaultClassifyBudget = 20000;

// u(x0, t0) = (1 / (2 sqrt(pi t0))) * integral of exp(-(x0-y)^2 / (4 t0)) f(y) dy.
EvalOutcome heat_eval(const BoundaryFunction& f, double x0, double t0, double tol = kDefaultTol);
ConvergenceVerdict heat_classify(const BoundaryFunction& f, double x0, double t0,
                                 std::size_t budget = kDefaultClassifyBudget);

// Phi(x0, y0) = (y0 / pi) * integral of f(t) / ((t - x0)^2 + y0^2) dt.
// With check_normalized the substituted form
//   sign(y0) / pi * integral of f(y0 u + x0) / (u^2 + 1) du
// is evaluated independently and must agree within 2 tol.
EvalOutcome electro_eval(const BoundaryFunction& f, double x0, double y0, double tol = kDefaultTol,
                         bool check_normalized = true);
ConvergenceVerdict electro_classify(const BoundaryFunction& f, double x0, double y0,
                                    std::size_t budget = kDefaultClassifyBudget);

struct Problem {
  enum class Kind { Heat, Electro } kind = Kind::Heat;
  double x0 = 0.0;
  double s0 = 1.0;  // t0 for heat, y0 for electro
};

enum class SequenceSymbol { Zero, One, Bottom };

// c_i for f_i = (y^2+1)^-1 H_i^-2 (heat) or f_i = H_i^-2 (electro):
// Zero if Finite, One if Divergent, Bottom if Unknown.
std::vector<SequenceSymbol> verdict_sequence(const std::vector<Expr>& family, const Problem& problem,
                                             std::size_t budget = kDefaultClassifyBudget);

// One expression per line; blank lines and '#' comments are skipped.
std::vector<Expr> parse_family(std::string_view text);

const char* outcome_name(const EvalOutcome& o);
char symbol_char(SequenceSymbol s);  // '0', '1', or '?'

}  // namespace uncomp
