#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace uncomp {

// Closed interval over the extended reals.  Every operation rounds
// outward: an inexact endpoint is widened by kWidenUlps ulps, an endpoint
// proven exact (error-free transform or exact special value) is kept.
class Interval {
 public:
  static constexpr int kWidenUlps = 4;

  Interval() = default;
  Interval(double lo, double hi);  // throws std::invalid_argument unless lo <= hi
  static Interval point(double x) { return {x, x}; }
  static Interval entire();

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const;
  double mag() const { return std::fmax(std::fabs(lo_), std::fabs(hi_)); }
  double mig() const;  // min |x| over the interval

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool subset_of(const Interval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  bool strictly_positive() const { return lo_ > 0.0; }
  bool strictly_negative() const { return hi_ < 0.0; }
  bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

double round_down(double x, int ulps = Interval::kWidenUlps);
double round_up(double x, int ulps = Interval::kWidenUlps);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval reciprocal(const Interval& a);  // requires 0 not in a
Interval operator/(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval exp(const Interval& a);
Interval sqrt(const Interval& a);  // requires a.lo() >= 0
Interval hull(const Interval& a, const Interval& b);

// Certified enclosure of pi.
Interval pi_interval();

// Enclosure of p/q for integers p, q != 0.
Interval rational_interval(long long p, long long q);

}  // namespace uncomp
