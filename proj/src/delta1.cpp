#include "uncomp/delta1.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>

#include "uncomp/error.hpp"

namespace uncomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.38196601125010515;
constexpr std::size_t kMaxBoxes = std::size_t{1} << 22;

void require_unary(const Expr& g) {
  if (max_var(g) > 1) throw DomainError("expression must use only x1");
}

double atan_lo(double x) {
  const double half_pi_hi = pi_interval().hi() / 2;
  if (x == -kInf) return -half_pi_hi;
  if (x == kInf) return pi_interval().lo() / 2;
  return std::max(-half_pi_hi, round_down(std::atan(x)));
}

double atan_hi(double x) {
  const double half_pi_hi = pi_interval().hi() / 2;
  if (x == kInf) return half_pi_hi;
  if (x == -kInf) return -pi_interval().lo() / 2;
  return std::min(half_pi_hi, round_up(std::atan(x)));
}

// Upper bound of the integral of 1/(x^2+1) over x.
double arc_width_up(const Interval& x) {
  return (Interval::point(atan_hi(x.hi())) - Interval::point(atan_lo(x.lo()))).hi();
}

// Split point chosen in the arctan coordinate so that unbounded boxes
// shrink toward finite ones.  The golden fraction keeps split points away
// from simple roots like 0 and k*pi.
std::optional<double> theta_split(const Interval& x) {
  const double ta = x.lo() == -kInf ? -M_PI_2 : std::atan(x.lo());
  const double tb = x.hi() == kInf ? M_PI_2 : std::atan(x.hi());
  for (double f : {kGolden, 0.5, 1.0 - kGolden}) {
    const double m = std::tan(ta + f * (tb - ta));
    if (std::isfinite(m) && x.lo() < m && m < x.hi()) return m;
  }
  if (x.is_finite()) {
    const double m = x.lo() + 0.5 * (x.hi() - x.lo());
    if (x.lo() < m && m < x.hi()) return m;
  }
  return std::nullopt;
}

}  // namespace

int certified_sign(const Expr& g, double x) {
  const Interval v = eval_interval(g, Interval::point(x));
  if (v.strictly_positive()) return 1;
  if (v.strictly_negative()) return -1;
  return 0;
}

Interval refine_bracket(const Expr& g, Interval bracket, int sign_at_lo, int max_steps) {
  double lo = bracket.lo();
  double hi = bracket.hi();
  for (int step = 0; step < max_steps; ++step) {
    bool moved = false;
    for (double f : {0.5, kGolden, 1.0 - kGolden, 0.25, 0.75}) {
      const double m = lo + f * (hi - lo);
      if (!(lo < m && m < hi)) continue;
      const int s = certified_sign(g, m);
      if (s == 0) continue;
      (s == sign_at_lo ? lo : hi) = m;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return {lo, hi};
}

bool pole_certificate(const Expr& g, const Interval& box, PoleCertificate& out) {
  if (!box.is_finite()) return false;
  const int sa = certified_sign(g, box.lo());
  const int sb = certified_sign(g, box.hi());
  if (sa == 0 || sa != -sb) return false;
  const IntervalJet jet = eval_jet(g, box);
  const double lip = jet.derivative.mag();
  if (!std::isfinite(lip) || lip == 0.0) return false;
  const Interval weight = reciprocal(Interval::point(1.0) + sqr(box));
  if (!(weight.lo() > 0.0)) return false;
  out.root_bracket = refine_bracket(g, box, sa);
  out.neighbourhood = box;
  out.lipschitz = lip;
  out.weight_min = weight.lo();
  return true;
}

RootVerdict find_root(const Expr& g, double radius, int depth_budget) {
  require_unary(g);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("radius must be positive and finite");
  }
  if (depth_budget < 0) throw DomainError("depth budget must be nonnegative");

  struct Item {
    Interval x;
    int depth;
  };
  const Interval box(-radius, radius);
  std::deque<Item> queue{{box, 0}};
  std::map<double, int> signs;  // sample points with a certified sign
  std::size_t boxes = 0;
  std::size_t undecided = 0;
  double delta = kInf;

  // Records the sign at x and reports a bracket against a neighbouring
  // sample of opposite sign.
  auto sample = [&](double x) -> std::optional<HasRoot> {
    const int s = certified_sign(g, x);
    if (s == 0) return std::nullopt;
    auto [it, inserted] = signs.emplace(x, s);
    if (!inserted) return std::nullopt;
    if (it != signs.begin()) {
      auto prev = std::prev(it);
      if (prev->second == -s) return HasRoot{{prev->first, x}, prev->second, boxes};
    }
    auto next = std::next(it);
    if (next != signs.end() && next->second == -s) return HasRoot{{x, next->first}, s, boxes};
    return std::nullopt;
  };
  auto finish = [&](HasRoot h) -> RootVerdict {
    h.bracket = refine_bracket(g, h.bracket, h.sign_at_lo);
    h.boxes = boxes;
    return h;
  };

  if (auto h = sample(box.lo())) return finish(*h);
  if (auto h = sample(box.hi())) return finish(*h);

  while (!queue.empty()) {
    if (boxes >= kMaxBoxes) return Unknown{"box limit reached", boxes};
    const Item item = queue.front();
    queue.pop_front();
    ++boxes;
    const Interval v = eval_interval(g, item.x);
    if (!v.contains_zero()) {
      delta = std::min(delta, v.mig());
      continue;
    }
    if (item.depth >= depth_budget) {
      ++undecided;
      continue;
    }
    const double m = item.x.mid();
    if (!(item.x.lo() < m && m < item.x.hi())) {
      ++undecided;
      continue;
    }
    if (auto h = sample(m)) return finish(*h);
    queue.push_back({{item.x.lo(), m}, item.depth + 1});
    queue.push_back({{m, item.x.hi()}, item.depth + 1});
  }
  if (undecided == 0) return NoRootInBox{box, delta, boxes};
  return Unknown{std::to_string(undecided) + " boxes undecided at the depth budget", boxes};
}

ConvergenceVerdict integral_convergence(const Expr& g, std::size_t budget) {
  require_unary(g);
  std::deque<Interval> queue{Interval::entire()};
  std::size_t boxes = 0;
  double delta = kInf;
  Interval bound = Interval::point(0.0);
  while (!queue.empty()) {
    if (boxes >= budget) return Unknown{"box budget exhausted", boxes};
    const Interval x = queue.front();
    queue.pop_front();
    ++boxes;
    const Interval v = eval_interval(g, x);
    if (!v.contains_zero()) {
      const double m = v.mig();
      delta = std::min(delta, m);
      const Interval m2 = sqr(Interval::point(m));
      if (m2.lo() > 0.0) {
        bound = bound + Interval::point(arc_width_up(x)) * reciprocal(Interval(m2.lo(), m2.lo()));
      } else {
        bound = Interval::point(kInf);
      }
      continue;
    }
    PoleCertificate cert;
    if (pole_certificate(g, x, cert)) return Divergent{cert};
    const auto m = theta_split(x);
    if (!m) return Unknown{"box cannot be split further", boxes};
    queue.push_back({x.lo(), *m});
    queue.push_back({*m, x.hi()});
  }
  double upper = bound.hi();
  const Interval d2 = sqr(Interval::point(delta));
  if (d2.lo() > 0.0) upper = std::min(upper, (pi_interval() * reciprocal(Interval::point(d2.lo()))).hi());
  return Finite{upper, delta, boxes};
}

const char* verdict_name(const RootVerdict& v) {
  switch (v.index()) {
    case 0:
      return "HasRoot";
    case 1:
      return "NoRootInBox";
    default:
      return "Unknown";
  }
}

const char* verdict_name(const ConvergenceVerdict& v) {
  switch (v.index()) {
    case 0:
      return "Finite";
    case 1:
      return "Divergent";
    default:
      return "Unknown";
  }
}

}  // namespace uncomp
