#pragma once

// Slow, independent implementations used to cross-check the fast paths.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "uncomp/delta1.hpp"
#include "uncomp/enumeration.hpp"
#include "uncomp/machine.hpp"

namespace uncomp::reference {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

// universal_run on every string of length <= max_len, no pruning.
std::vector<Classified> all_runs(unsigned max_len, std::uint64_t budget, RegisterMode mode);

struct Prediction {
  std::uint64_t t = 0;
  Program canonical;
};

// Scans every z with |z| <= T_U(x) in quasi-lex order with budget T_U(x).
// Each step reads at most one bit, so no faster program can be longer.
Prediction brute_force_min_time(const Program& x, RegisterMode mode = RegisterMode::capped());

HighPrecision eval_high_precision(const Expr& e, const HighPrecision& x);
bool encloses(const Interval& iv, const HighPrecision& v);

// Random arity-1 expression with at most `depth` levels of operators.
Expr random_expr(std::mt19937_64& rng, int depth);

// Closed forms.
double heat_cauchy_at_origin(double t0);              // f = 1/(y^2+1), x0 = 0
double electro_cauchy(double x0, double y0);          // f = 1/(t^2+1), y0 > 0
double heat_gauss_sq(double x0, double t0);           // f = exp(y^2), t0 < 1/4

// Re-verification of Delta1 verdicts by 50-digit evaluation.
bool verify_has_root(const Expr& g, const HasRoot& v);
// Splits every box of a fresh branch-and-prune cover once more and
// re-evaluates; also samples the box at high precision.
bool verify_no_root(const Expr& g, const NoRootInBox& v, int depth_budget);
// Checks the sign change, the derivative bound and weight(x) >= weight_min
// at sample points, and that the stated lower bound integrates past
// `threshold` on a refined bracket.  The default weight is 1/(x^2+1).
using Weight = std::function<HighPrecision(const HighPrecision&)>;
bool verify_pole(const Expr& g, const PoleCertificate& c, const Weight& weight, double threshold = 1e6);
bool verify_pole(const Expr& g, const PoleCertificate& c, double threshold = 1e6);

}  // namespace uncomp::reference
