#include "uncomp/interval.hpp"

#include <algorithm>
#include <cfloat>
#include <sstream>
#include <stdexcept>

namespace uncomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower/upper endpoint of an operation whose rounded result is r and whose
// exactness has been established (or not) by the caller.
double lower(double r, bool exact) {
  if (std::isnan(r)) return -kInf;
  if (r == kInf) return DBL_MAX;  // finite operands overflowed
  return exact ? r : round_down(r);
}

double upper(double r, bool exact) {
  if (std::isnan(r)) return kInf;
  if (r == -kInf) return -DBL_MAX;
  return exact ? r : round_up(r);
}

bool sum_exact(double a, double b, double s) {
  if (!std::isfinite(s)) return std::isinf(a) || std::isinf(b);
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err == 0.0;
}

bool product_exact(double a, double b, double p) {
  if (!std::isfinite(p)) return std::isinf(a) || std::isinf(b);
  return std::fma(a, b, -p) == 0.0;
}

double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (std::isinf(p) && std::isfinite(a) && std::isfinite(b)) return p > 0 ? DBL_MAX : -kInf;
  return lower(p, product_exact(a, b, p));
}

double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (std::isinf(p) && std::isfinite(a) && std::isfinite(b)) return p > 0 ? kInf : -DBL_MAX;
  return upper(p, product_exact(a, b, p));
}

// Enclosure of sin at a single double.
Interval sin_point(double x) {
  if (x == 0.0) return Interval::point(0.0);
  const double v = std::sin(x);
  return {std::max(-1.0, round_down(v)), std::min(1.0, round_up(v))};
}

bool intersects(const Interval& a, double lo, double hi) { return a.hi() >= lo && a.lo() <= hi; }

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) throw std::invalid_argument("interval requires lo <= hi");
}

Interval Interval::entire() { return {-kInf, kInf}; }

double Interval::mid() const {
  if (std::isinf(lo_) && std::isinf(hi_)) return 0.0;
  if (std::isinf(lo_)) return -DBL_MAX;
  if (std::isinf(hi_)) return DBL_MAX;
  return lo_ + 0.5 * (hi_ - lo_);
}

double Interval::mig() const {
  if (contains_zero()) return 0.0;
  return std::fmin(std::fabs(lo_), std::fabs(hi_));
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '[' << lo_ << ", " << hi_ << ']';
  return os.str();
}

double round_down(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
  return x;
}

double round_up(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
  return x;
}

Interval operator+(const Interval& a, const Interval& b) {
  const double lo = a.lo() + b.lo();
  const double hi = a.hi() + b.hi();
  return {lower(lo, sum_exact(a.lo(), b.lo(), lo)), upper(hi, sum_exact(a.hi(), b.hi(), hi))};
}

Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  const double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()),
                              mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())});
  const double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()),
                              mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())});
  return {lo, hi};
}

Interval reciprocal(const Interval& a) {
  if (a.contains_zero()) throw std::domain_error("reciprocal of an interval containing 0");
  auto inv = [](double x, bool down) {
    if (std::isinf(x)) return 0.0;
    const double r = 1.0 / x;
    const bool exact = std::isfinite(r) && std::fma(r, x, -1.0) == 0.0;
    return down ? lower(r, exact) : upper(r, exact);
  };
  return {inv(a.hi(), true), inv(a.lo(), false)};
}

Interval operator/(const Interval& a, const Interval& b) { return a * reciprocal(b); }

Interval sqr(const Interval& a) {
  if (a.lo() >= 0.0) return {mul_down(a.lo(), a.lo()), mul_up(a.hi(), a.hi())};
  if (a.hi() <= 0.0) return {mul_down(a.hi(), a.hi()), mul_up(a.lo(), a.lo())};
  return {0.0, std::max(mul_up(a.lo(), a.lo()), mul_up(a.hi(), a.hi()))};
}

Interval sin(const Interval& a) {
  // 6 < 2*pi: wider arguments always cover a full period.
  if (!a.is_finite() || a.width() >= 6.0 || a.mag() > 0x1p50) return {-1.0, 1.0};
  const Interval sl = sin_point(a.lo());
  const Interval sh = sin_point(a.hi());
  double lo = std::min(sl.lo(), sh.lo());
  double hi = std::max(sl.hi(), sh.hi());

  // Extrema at (2k + 1/2)pi (max) and (2k - 1/2)pi (min).
  const Interval pi = pi_interval();
  const double two_pi = 2.0 * pi.lo();
  const double kmin = std::floor(a.lo() / two_pi) - 1.0;
  const double kmax = std::ceil(a.hi() / two_pi) + 1.0;
  for (double k = kmin; k <= kmax; k += 1.0) {
    const Interval peak = Interval::point(2.0 * k + 0.5) * pi;
    const Interval trough = Interval::point(2.0 * k - 0.5) * pi;
    if (intersects(peak, a.lo(), a.hi())) hi = 1.0;
    if (intersects(trough, a.lo(), a.hi())) lo = -1.0;
  }
  return {lo, hi};
}

Interval cos(const Interval& a) { return sin(a + Interval::point(0.5) * pi_interval()); }

Interval exp(const Interval& a) {
  auto lo_of = [](double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    const double v = std::exp(x);
    return std::max(0.0, lower(v, false));
  };
  auto hi_of = [](double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    return upper(std::exp(x), false);
  };
  return {lo_of(a.lo()), hi_of(a.hi())};
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw std::domain_error("sqrt of an interval with negative part");
  // sqrt is correctly rounded; a squared-back check detects exact roots.
  auto root = [](double x, bool down) {
    if (x == 0.0 || std::isinf(x)) return x;
    const double r = std::sqrt(x);
    const bool exact = std::fma(r, r, -x) == 0.0;
    return down ? lower(r, exact) : upper(r, exact);
  };
  return {root(a.lo(), true), root(a.hi(), false)};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval pi_interval() {
  // M_PI rounds down: 3.141592653589793115... < pi.
  constexpr double pi_lo = 3.141592653589793;
  return {pi_lo, std::nextafter(pi_lo, 4.0)};
}

Interval rational_interval(long long p, long long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  const bool inputs_exact = std::fabs(pd) <= 0x1p53 && std::fabs(qd) <= 0x1p53 &&
                            static_cast<long long>(pd) == p && static_cast<long long>(qd) == q;
  const double r = pd / qd;
  const bool exact = inputs_exact && std::fma(r, qd, -pd) == 0.0;
  return {lower(r, exact), upper(r, exact)};
}

}  // namespace uncomp
