#include "uncomp/reference.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "uncomp/error.hpp"

namespace uncomp::reference {

using boost::multiprecision::abs;

std::vector<Classified> all_runs(unsigned max_len, std::uint64_t budget, RegisterMode mode) {
  std::vector<Classified> out;
  const std::uint64_t total = (std::uint64_t{2} << max_len) - 1;
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    Program p = BitString::from_index(m);
    RunResult r = universal_run(p, budget, mode);
    out.push_back({std::move(p), std::move(r)});
  }
  return out;
}

Prediction brute_force_min_time(const Program& x, RegisterMode mode) {
  const RunResult first = universal_run(x, 1'000'000, mode);
  const auto* h = as_halted(first);
  if (!h) throw DomainError("not a domain program");
  const std::uint64_t T = h->steps;
  if (T > 26) throw DomainError("brute force limited to T_U(x) <= 26");
  Prediction best{T, x};
  const std::uint64_t total = (std::uint64_t{2} << T) - 1;
  for (std::uint64_t m = 0; m < total; ++m) {
    const Program z = BitString::from_index(m);
    const RunResult r = universal_run(z, T, mode);
    const auto* hz = as_halted(r);
    if (!hz || hz->output != h->output) continue;
    // Quasi-lex scan: the first program reaching a strictly smaller time wins.
    if (hz->steps < best.t || (hz->steps == best.t && z < best.canonical)) {
      best = {hz->steps, z};
    }
  }
  return best;
}

HighPrecision eval_high_precision(const Expr& e, const HighPrecision& x) {
  switch (e.kind()) {
    case Expr::Kind::Rational:
      return HighPrecision(e.rational_value().num) / HighPrecision(e.rational_value().den);
    case Expr::Kind::Pi:
      return boost::math::constants::pi<HighPrecision>();
    case Expr::Kind::Var:
      return x;
    case Expr::Kind::Add:
      return eval_high_precision(e.lhs(), x) + eval_high_precision(e.rhs(), x);
    case Expr::Kind::Mul: {
      const HighPrecision a = eval_high_precision(e.lhs(), x);
      const HighPrecision b = eval_high_precision(e.rhs(), x);
      if (a == 0 || b == 0) return 0;
      return a * b;
    }
    case Expr::Kind::Sin:
      return sin(eval_high_precision(e.arg(), x));
    case Expr::Kind::Exp:
      return exp(eval_high_precision(e.arg(), x));
  }
  return 0;
}

bool encloses(const Interval& iv, const HighPrecision& v) {
  return HighPrecision(iv.lo()) <= v && v <= HighPrecision(iv.hi());
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  if (depth <= 0 || pick(rng) < 30) {
    const int leaf = pick(rng);
    if (leaf < 50) return Expr::var(1);
    if (leaf < 60) return Expr::pi();
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    return Expr::rational(num(rng), den(rng));
  }
  const int op = pick(rng);
  if (op < 35) return Expr::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  if (op < 65) return Expr::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  if (op < 85) return Expr::sin(random_expr(rng, depth - 1));
  return Expr::exp(random_expr(rng, depth - 1));
}

double heat_cauchy_at_origin(double t0) {
  const double a = 1.0 / (2.0 * std::sqrt(t0));
  return std::sqrt(M_PI) * a * std::exp(a * a) * std::erfc(a);
}

double electro_cauchy(double x0, double y0) {
  return (y0 + 1.0) / (x0 * x0 + (y0 + 1.0) * (y0 + 1.0));
}

double heat_gauss_sq(double x0, double t0) {
  const double alpha = 1.0 - 4.0 * t0;
  return std::exp(x0 * x0 / alpha) / std::sqrt(alpha);
}

namespace {

int hp_sign(const Expr& g, const HighPrecision& x) {
  const HighPrecision v = eval_high_precision(g, x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

bool cover(const Expr& g, const Interval& box, double delta, int depth) {
  const Interval v = eval_interval(g, box);
  if (!v.contains_zero() && v.mig() >= delta) {
    const double m = box.mid();
    if (!(box.lo() < m && m < box.hi())) return true;
    for (const Interval& half : {Interval(box.lo(), m), Interval(m, box.hi())}) {
      const Interval hv = eval_interval(g, half);
      if (hv.contains_zero() || hv.mig() < delta) return false;
    }
    return true;
  }
  if (depth <= 0) return false;
  const double m = box.mid();
  if (!(box.lo() < m && m < box.hi())) return false;
  return cover(g, {box.lo(), m}, delta, depth - 1) && cover(g, {m, box.hi()}, delta, depth - 1);
}

}  // namespace

bool verify_has_root(const Expr& g, const HasRoot& v) {
  const int lo = hp_sign(g, HighPrecision(v.bracket.lo()));
  const int hi = hp_sign(g, HighPrecision(v.bracket.hi()));
  return lo != 0 && lo == v.sign_at_lo && hi == -lo;
}

bool verify_no_root(const Expr& g, const NoRootInBox& v, int depth_budget) {
  if (!(v.delta > 0.0)) return false;
  if (!cover(g, v.box, v.delta, depth_budget)) return false;
  constexpr int kSamples = 2001;
  for (int i = 0; i < kSamples; ++i) {
    const HighPrecision x = HighPrecision(v.box.lo()) +
                            (HighPrecision(v.box.hi()) - HighPrecision(v.box.lo())) * i / (kSamples - 1);
    if (abs(eval_high_precision(g, x)) < HighPrecision(v.delta)) return false;
  }
  return true;
}

bool verify_pole(const Expr& g, const PoleCertificate& c, double threshold) {
  return verify_pole(g, c, [](const HighPrecision& x) { return 1 / (1 + x * x); }, threshold);
}

bool verify_pole(const Expr& g, const PoleCertificate& c, const Weight& weight, double threshold) {
  if (!c.root_bracket.subset_of(c.neighbourhood) || !(c.lipschitz > 0.0) || !(c.weight_min > 0.0)) {
    return false;
  }
  HighPrecision a(c.root_bracket.lo()), b(c.root_bracket.hi());
  const int sa = hp_sign(g, a);
  if (sa == 0 || hp_sign(g, b) != -sa) return false;

  const HighPrecision lo(c.neighbourhood.lo()), hi(c.neighbourhood.hi());
  const HighPrecision L(c.lipschitz);
  const HighPrecision h("1e-20");
  constexpr int kSamples = 201;
  for (int i = 0; i < kSamples; ++i) {
    const HighPrecision x = lo + (hi - lo) * i / (kSamples - 1);
    const HighPrecision d = (eval_high_precision(g, x + h) - eval_high_precision(g, x - h)) / (2 * h);
    if (abs(d) > L * HighPrecision(1 + 1e-9)) return false;
    if (weight(x) < HighPrecision(c.weight_min)) return false;
  }

  for (int i = 0; i < 120; ++i) {
    HighPrecision m = (a + b) / 2;
    int s = hp_sign(g, m);
    if (s == 0) {
      m = a + (b - a) / 3;
      s = hp_sign(g, m);
      if (s == 0) break;
    }
    (s == sa ? a : b) = m;
  }
  // Lower Riemann sums of w / (L^2 (x - r)^2) on geometric grids; r lies in [a, b].
  const HighPrecision scale = HighPrecision(c.weight_min) / (L * L);
  auto side = [&](const HighPrecision& from, const HighPrecision& to, const HighPrecision& r) {
    HighPrecision gap0 = abs(from - r), gap1 = abs(to - r);
    if (gap1 <= gap0 || gap0 <= 0) return HighPrecision(0);
    HighPrecision sum = 0;
    HighPrecision x = gap0;
    while (x < gap1) {
      const HighPrecision next = std::min<HighPrecision>(x * 2, gap1);
      sum += scale * (next - x) / (next * next);
      x = next;
    }
    return sum;
  };
  const HighPrecision right = side(b, hi, a);
  const HighPrecision left = side(a, lo, b);
  return std::max(right, left) > HighPrecision(threshold);
}

}  // namespace uncomp::reference
