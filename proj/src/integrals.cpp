#include "uncomp/integrals.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "uncomp/error.hpp"
#include "uncomp/quadrature.hpp"

namespace uncomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
// Relative slack on tail bounds for the libm erfc/atan values they use.
constexpr double kTailSlack = 1.0 + 1e-9;

Interval pt(double x) { return Interval::point(x); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Builtin> builtin_named(std::string_view s) {
  if (s == "one") return Builtin::One;
  if (s == "cauchy") return Builtin::Cauchy;
  if (s == "gauss_sq") return Builtin::GaussSq;
  return std::nullopt;
}

const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::One:
      return "one";
    case Builtin::Cauchy:
      return "cauchy";
    case Builtin::GaussSq:
      return "gauss_sq";
  }
  return "?";
}

Expr parse_at(std::string_view text, std::size_t offset) {
  try {
    return parse_expr(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.location() + offset);
  }
}

bool is_gauss_sq(const BoundaryFunction& f) {
  const auto* b = std::get_if<Builtin>(&f.v);
  return b && *b == Builtin::GaussSq;
}

// Upper bound on |f| over y, using the certified global |G| >= delta for
// the reciprocal forms when the direct enclosure is unbounded.
double sup_abs(const BoundaryFunction& f, const Interval& y, double delta) {
  const double m = enclose_boundary(f, y).mag();
  if (std::isfinite(m)) return m;
  const bool recip = std::holds_alternative<Reciprocal2>(f.v) ||
                     std::holds_alternative<CauchyReciprocal2>(f.v);
  if (recip && delta > 0.0) {
    const Interval d2 = sqr(pt(delta));
    if (d2.lo() > 0.0) return reciprocal(pt(d2.lo())).hi();
  }
  return kInf;
}

Interval right_ray(double from) { return {round_down(from), kInf}; }
Interval left_ray(double to) { return {-kInf, round_up(to)}; }

// Heat kernel (1/(2 sqrt(pi t0))) exp(-(x0-y)^2/(4 t0)) enclosed over y.
Interval heat_kernel(const Interval& y, double x0, double t0) {
  const Interval d = y - pt(x0);
  const Interval e = exp(-(sqr(d) * reciprocal(pt(4.0) * pt(t0))));
  return e * reciprocal(pt(2.0) * sqrt(pi_interval() * pt(t0)));
}

// Poisson kernel |y0| / (pi ((t-x0)^2 + y0^2)) enclosed over t.
Interval poisson_kernel(const Interval& t, double x0, double y0) {
  const Interval ay = pt(std::fabs(y0));
  return ay * reciprocal(pi_interval() * (sqr(t - pt(x0)) + sqr(ay)));
}

using KernelFn = std::function<Interval(const Interval&)>;

// Shared classification of the reciprocal forms: f = w G^-2 with w = 1
// (Reciprocal2) or 1/(y^2+1) (CauchyReciprocal2).  kernel_max bounds the
// kernel over R.
ConvergenceVerdict classify_reciprocal(const Expr& g, bool cauchy, const KernelFn& kernel,
                                       double kernel_max, std::size_t budget) {
  ConvergenceVerdict v = integral_convergence(g, budget);
  if (auto* fin = std::get_if<Finite>(&v)) {
    // The kernels integrate to 1, so sup f bounds the result.
    const Interval d2 = sqr(pt(fin->delta));
    double bound = d2.lo() > 0.0 ? reciprocal(pt(d2.lo())).hi() : kInf;
    if (cauchy) bound = std::min(bound, (pt(fin->upper_bound) * pt(kernel_max)).hi());
    return Finite{bound, fin->delta, fin->boxes};
  }
  if (auto* div = std::get_if<Divergent>(&v)) {
    PoleCertificate cert = std::get<PoleCertificate>(div->certificate);
    const Interval k = kernel(cert.neighbourhood);
    const Interval w = cauchy ? k * pt(cert.weight_min) : k;
    cert.weight_min = w.lo();
    if (!(cert.weight_min > 0.0)) return Unknown{"kernel lower bound vanished near the pole", 0};
    return Divergent{cert};
  }
  return v;
}

// Certifies q(y) = a y^2 + b y + c >= 0 on the ray from y_star in
// direction dir, given a >= 0: q(y_star) >= 0 and q is monotone beyond.
bool exponent_nonnegative(const Interval& a, const Interval& b, const Interval& c, double y_star,
                          int dir) {
  if (a.lo() < 0.0) return false;
  const Interval y = pt(y_star);
  const Interval q = a * sqr(y) + b * y + c;
  const Interval dq = pt(2.0) * a * y + b;
  if (q.lo() < 0.0) return false;
  return dir > 0 ? dq.lo() >= 0.0 : dq.hi() <= 0.0;
}

std::optional<ExponentCertificate> exponent_certificate(const Interval& a, const Interval& b,
                                                        const Interval& c, bool paper) {
  const double am = a.mid(), bm = b.mid(), cm = c.mid();
  int dir = 1;
  double start = 0.0;
  if (am > 0.0) {
    const double disc = std::max(0.0, bm * bm - 4.0 * am * cm);
    const double root = (-bm + std::sqrt(disc)) / (2.0 * am);
    start = std::ceil(std::max(root, -bm / (2.0 * am))) + 1.0;
  } else {
    dir = bm < 0.0 ? -1 : 1;
    start = bm == 0.0 ? 0.0 : std::ceil(std::fabs(cm / bm)) * dir + dir;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (exponent_nonnegative(a, b, c, start, dir)) {
      return ExponentCertificate{am, bm, cm, start, dir, paper};
    }
    start = start == 0.0 ? dir : 2.0 * start;
  }
  return std::nullopt;
}

ConvergenceVerdict classify_builtin_heat(Builtin b, double x0, double t0) {
  switch (b) {
    case Builtin::One:
    case Builtin::Cauchy:
      return Finite{1.0, 0.0, 0};
    case Builtin::GaussSq:
      break;
  }
  const Interval x = pt(x0);
  const Interval t = pt(t0);
  if (t0 > 1.0) {
    // exp(-(x0-y)^2/(4 t0)) >= exp(-(x0-y)^2/4) once t0 > 1.
    auto cert = exponent_certificate(pt(0.75), x * pt(0.5), -(sqr(x) * pt(0.25)), true);
    if (cert) return Divergent{*cert};
    return Unknown{"exponent certificate failed", 0};
  }
  const Interval inv4t = reciprocal(pt(4.0) * t);
  const Interval a = pt(1.0) - inv4t;
  if (t0 >= 0.25) {
    auto cert = exponent_certificate(a, pt(2.0) * x * inv4t, -(sqr(x) * inv4t), false);
    if (cert) return Divergent{*cert};
    return Unknown{"exponent certificate failed", 0};
  }
  // In s = (y - x0) / (2 sqrt(t0)) the integrand is a Gaussian with
  // alpha = 1 - 4 t0, giving u = exp(x0^2 / alpha) / sqrt(alpha).
  const Interval alpha = pt(1.0) - pt(4.0) * t;
  const Interval value = exp(sqr(x) * reciprocal(alpha)) * reciprocal(sqrt(alpha));
  return Finite{value.hi(), 0.0, 0};
}

ConvergenceVerdict classify_bounded(const Expr& g) {
  const double m = eval_interval(g, Interval::entire()).mag();
  if (std::isfinite(m)) return Finite{m, 0.0, 1};
  return Unknown{"boundary data not certifiably bounded", 1};
}

ConvergenceVerdict classify_linear(const Linear& lin,
                                   const std::function<ConvergenceVerdict(const BoundaryFunction&)>& one) {
  Interval total = pt(0.0);
  std::size_t boxes = 0;
  for (const auto& term : lin.terms) {
    ConvergenceVerdict v = one(*term.f);
    const auto* fin = std::get_if<Finite>(&v);
    if (!fin) return Unknown{"a term of the combination is not certified finite", boxes};
    total = total + pt(std::fabs(term.coef)) * pt(fin->upper_bound);
    boxes += fin->boxes;
  }
  return Finite{total.hi(), 0.0, boxes};
}

std::vector<double> geometric_breakpoints(double center, double unit, int kmax) {
  std::vector<double> pts;
  for (int k = kmax; k >= -2; --k) pts.push_back(center - unit * std::ldexp(1.0, k));
  pts.push_back(center);
  for (int k = -2; k <= kmax; ++k) pts.push_back(center + unit * std::ldexp(1.0, k));
  return pts;
}

std::vector<double> uniform_breakpoints(double a, double b, int n) {
  std::vector<double> pts;
  for (int i = 0; i <= n; ++i) pts.push_back(i == n ? b : a + (b - a) * i / n);
  return pts;
}

}  // namespace

BoundaryFunction parse_boundary(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t lead = static_cast<std::size_t>(s.data() - text.data());
  if (auto b = builtin_named(s)) return {*b};
  constexpr std::string_view kRecip = "recip2:";
  constexpr std::string_view kCauchyRecip = "cauchy-recip2:";
  constexpr std::string_view kCombo = "combo:";
  if (s.starts_with(kRecip)) {
    return {Reciprocal2{parse_at(s.substr(kRecip.size()), lead + kRecip.size())}};
  }
  if (s.starts_with(kCauchyRecip)) {
    return {CauchyReciprocal2{parse_at(s.substr(kCauchyRecip.size()), lead + kCauchyRecip.size())}};
  }
  if (s.starts_with(kCombo)) {
    Linear lin;
    std::size_t pos = kCombo.size();
    while (pos <= s.size()) {
      std::size_t end = s.find('+', pos);
      if (end == std::string_view::npos) end = s.size();
      const std::string_view term = trim(s.substr(pos, end - pos));
      const std::size_t star = term.find('*');
      if (star == std::string_view::npos) throw ParseError("combo term needs <coef>*<builtin>", lead + pos);
      const std::string coef_text(trim(term.substr(0, star)));
      const auto name = builtin_named(trim(term.substr(star + 1)));
      if (!name) throw ParseError("combo terms must use one, cauchy or gauss_sq", lead + pos);
      double coef = 0.0;
      try {
        std::size_t used = 0;
        coef = std::stod(coef_text, &used);
        if (used != coef_text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + coef_text + "'", lead + pos);
      }
      lin.terms.push_back({coef, std::make_shared<const BoundaryFunction>(BoundaryFunction{*name})});
      pos = end + 1;
    }
    return {std::move(lin)};
  }
  return {Delta1Fn{parse_at(s, lead)}};
}

std::string to_string(const BoundaryFunction& f) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Builtin>) {
          return builtin_name(v);
        } else if constexpr (std::is_same_v<T, Delta1Fn>) {
          return to_string(v.g);
        } else if constexpr (std::is_same_v<T, Reciprocal2>) {
          return "recip2:" + to_string(v.g);
        } else if constexpr (std::is_same_v<T, CauchyReciprocal2>) {
          return "cauchy-recip2:" + to_string(v.g);
        } else {
          std::ostringstream os;
          os.precision(17);
          os << "combo:";
          for (std::size_t i = 0; i < v.terms.size(); ++i) {
            if (i) os << '+';
            os << v.terms[i].coef << '*' << to_string(*v.terms[i].f);
          }
          return os.str();
        }
      },
      f.v);
}

double eval_boundary(const BoundaryFunction& f, double y) {
  return std::visit(
      [y](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Builtin>) {
          switch (v) {
            case Builtin::One:
              return 1.0;
            case Builtin::Cauchy:
              return 1.0 / (y * y + 1.0);
            case Builtin::GaussSq:
              return std::exp(y * y);
          }
          return 0.0;
        } else if constexpr (std::is_same_v<T, Delta1Fn>) {
          return eval_point(v.g, y);
        } else if constexpr (std::is_same_v<T, Reciprocal2>) {
          const double g = eval_point(v.g, y);
          return 1.0 / (g * g);
        } else if constexpr (std::is_same_v<T, CauchyReciprocal2>) {
          const double g = eval_point(v.g, y);
          return 1.0 / ((y * y + 1.0) * g * g);
        } else {
          double s = 0.0;
          for (const auto& t : v.terms) s += t.coef * eval_boundary(*t.f, y);
          return s;
        }
      },
      f.v);
}

Interval enclose_boundary(const BoundaryFunction& f, const Interval& y) {
  return std::visit(
      [&y](const auto& v) -> Interval {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Builtin>) {
          switch (v) {
            case Builtin::One:
              return pt(1.0);
            case Builtin::Cauchy:
              return reciprocal(pt(1.0) + sqr(y));
            case Builtin::GaussSq:
              return exp(sqr(y));
          }
          return Interval::entire();
        } else if constexpr (std::is_same_v<T, Delta1Fn>) {
          return eval_interval(v.g, y);
        } else if constexpr (std::is_same_v<T, Reciprocal2> || std::is_same_v<T, CauchyReciprocal2>) {
          const Interval g2 = sqr(eval_interval(v.g, y));
          if (g2.contains_zero()) return Interval::entire();
          Interval r = reciprocal(g2);
          if constexpr (std::is_same_v<T, CauchyReciprocal2>) r = r * reciprocal(pt(1.0) + sqr(y));
          return r;
        } else {
          Interval s = pt(0.0);
          for (const auto& t : v.terms) s = s + pt(t.coef) * enclose_boundary(*t.f, y);
          return s;
        }
      },
      f.v);
}

ConvergenceVerdict heat_classify(const BoundaryFunction& f, double x0, double t0, std::size_t budget) {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw DomainError("t0 must be positive and finite");
  if (!std::isfinite(x0)) throw DomainError("x0 must be finite");
  const KernelFn kernel = [x0, t0](const Interval& y) { return heat_kernel(y, x0, t0); };
  const double kernel_max = heat_kernel(pt(x0), x0, t0).hi();
  return std::visit(
      [&](const auto& v) -> ConvergenceVerdict {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Builtin>) {
          return classify_builtin_heat(v, x0, t0);
        } else if constexpr (std::is_same_v<T, Delta1Fn>) {
          return classify_bounded(v.g);
        } else if constexpr (std::is_same_v<T, Reciprocal2>) {
          return classify_reciprocal(v.g, false, kernel, kernel_max, budget);
        } else if constexpr (std::is_same_v<T, CauchyReciprocal2>) {
          return classify_reciprocal(v.g, true, kernel, kernel_max, budget);
        } else {
          return classify_linear(v, [&](const BoundaryFunction& g) {
            return heat_classify(g, x0, t0, budget);
          });
        }
      },
      f.v);
}

ConvergenceVerdict electro_classify(const BoundaryFunction& f, double x0, double y0,
                                    std::size_t budget) {
  if (y0 == 0.0 || !std::isfinite(y0)) throw DomainError("y0 must be finite and nonzero");
  if (!std::isfinite(x0)) throw DomainError("x0 must be finite");
  const KernelFn kernel = [x0, y0](const Interval& t) { return poisson_kernel(t, x0, y0); };
  const double kernel_max = poisson_kernel(pt(x0), x0, y0).hi();
  return std::visit(
      [&](const auto& v) -> ConvergenceVerdict {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Builtin>) {
          if (v != Builtin::GaussSq) return Finite{1.0, 0.0, 0};
          // For t >= T = max(2, |x0|, |y0|): (t-x0)^2 + y0^2 <= 5 t^2 <= exp(t^2),
          // so the integrand is at least |y0| / pi.
          const double T0 = std::max({2.0, std::fabs(x0), std::fabs(y0)});
          const double lo = (pt(std::fabs(y0)) * reciprocal(pi_interval())).lo();
          return Divergent{RayCertificate{T0, 1, lo}};
        } else if constexpr (std::is_same_v<T, Delta1Fn>) {
          return classify_bounded(v.g);
        } else if constexpr (std::is_same_v<T, Reciprocal2>) {
          return classify_reciprocal(v.g, false, kernel, kernel_max, budget);
        } else if constexpr (std::is_same_v<T, CauchyReciprocal2>) {
          return classify_reciprocal(v.g, true, kernel, kernel_max, budget);
        } else {
          return classify_linear(v, [&](const BoundaryFunction& g) {
            return electro_classify(g, x0, y0, budget);
          });
        }
      },
      f.v);
}

EvalOutcome heat_eval(const BoundaryFunction& f, double x0, double t0, double tol) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  const ConvergenceVerdict cls = heat_classify(f, x0, t0);
  if (auto* d = std::get_if<Divergent>(&cls)) return *d;
  if (auto* u = std::get_if<Unknown>(&cls)) return *u;
  const double delta = std::get<Finite>(cls).delta;

  const double scale = 2.0 * std::sqrt(t0);
  const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
  const bool gauss = is_gauss_sq(f);

  std::function<double(double)> integrand;
  std::function<double(double)> tail;
  if (gauss) {
    // exp(-s^2 + y^2) with y = x0 + scale s: a Gaussian in s of width 1/sqrt(alpha).
    integrand = [=](double s) {
      const double y = x0 + scale * s;
      return std::exp(y * y - s * s) * inv_sqrt_pi;
    };
    const double alpha = 1.0 - 4.0 * t0;
    const double s0 = 2.0 * x0 * std::sqrt(t0) / alpha;
    const double total = std::exp(x0 * x0 / alpha) / std::sqrt(alpha);
    tail = [=](double S) {
      const double ra = std::sqrt(alpha);
      return total * (std::erfc(ra * (S - s0)) + std::erfc(ra * (S + s0))) / 2 * kTailSlack;
    };
  } else {
    integrand = [=, &f](double s) {
      return std::exp(-s * s) * eval_boundary(f, x0 + scale * s) * inv_sqrt_pi;
    };
    tail = [=, &f](double S) {
      const double m = sup_abs(f, right_ray(x0 + scale * S), delta) +
                       sup_abs(f, left_ray(x0 - scale * S), delta);
      return m * std::erfc(S) / 2 * kTailSlack;
    };
  }

  double S = 2.0;
  while (!(tail(S) <= tol / 4) && S < 1e4) S = S < 12 ? S + 1 : S * 1.5;
  const double tail_bound = tail(S);
  if (!(tail_bound <= tol / 4)) return Unknown{"no certified tail bound", 0};

  const int panels = static_cast<int>(std::min(4096.0, std::ceil(2 * S)));
  const QuadratureResult q = integrate(integrand, uniform_breakpoints(-S, S, panels), tol / 2);
  if (!q.finite) return Unknown{"integrand overflowed", q.panels};
  const double err = q.error + tail_bound + 1e-15 * std::fabs(q.estimate);
  if (!(err <= tol)) return Unknown{"quadrature did not reach the tolerance", q.panels};
  return Value{q.estimate, err, std::nullopt, q.panels};
}

EvalOutcome electro_eval(const BoundaryFunction& f, double x0, double y0, double tol,
                         bool check_normalized) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  const ConvergenceVerdict cls = electro_classify(f, x0, y0);
  if (auto* d = std::get_if<Divergent>(&cls)) return *d;
  if (auto* u = std::get_if<Unknown>(&cls)) return *u;
  const double delta = std::get<Finite>(cls).delta;
  const double ay = std::fabs(y0);
  auto tail_sup = [&](double r) {
    return sup_abs(f, right_ray(x0 + r), delta) + sup_abs(f, left_ray(x0 - r), delta);
  };

  // Direct form in t, geometric panels around x0 out to distance T.
  int k = 0;
  double tail_a = kInf;
  for (; k <= 80; ++k) {
    const double T = ay * std::ldexp(1.0, k);
    tail_a = tail_sup(T) * std::atan(ay / T) / kPi * kTailSlack;
    if (tail_a <= tol / 4) break;
  }
  if (!(tail_a <= tol / 4)) return Unknown{"no certified tail bound", 0};
  const auto direct = [&](double t) {
    const double d = t - x0;
    return y0 / kPi * eval_boundary(f, t) / (d * d + y0 * y0);
  };
  const QuadratureResult qa = integrate(direct, geometric_breakpoints(x0, ay, k), tol / 2);
  if (!qa.finite) return Unknown{"integrand overflowed", qa.panels};
  const double err_a = qa.error + tail_a + 1e-15 * std::fabs(qa.estimate);
  if (!(err_a <= tol)) return Unknown{"quadrature did not reach the tolerance", qa.panels};
  Value out{qa.estimate, err_a, std::nullopt, qa.panels};
  if (!check_normalized) return out;

  // Normalised form with u = tan(theta) on [-pi/2 + eta, pi/2 - eta].
  // cot(eta) >= 1/eta - eta, so the cut-off tails lie beyond that distance.
  double eta = 0.5;
  double tail_b = kInf;
  for (int j = 1; j <= 60; ++j, eta /= 2) {
    tail_b = tail_sup(ay * (1.0 / eta - eta)) * eta / kPi * kTailSlack;
    if (tail_b <= tol / 4) break;
  }
  if (!(tail_b <= tol / 4)) return Unknown{"no certified tail bound for the normalised form", 0};
  const double sign = y0 > 0 ? 1.0 : -1.0;
  const auto normalised = [&](double theta) {
    return sign / kPi * eval_boundary(f, x0 + y0 * std::tan(theta));
  };
  const QuadratureResult qb =
      integrate(normalised, uniform_breakpoints(-kPi / 2 + eta, kPi / 2 - eta, 64), tol / 2);
  if (!qb.finite) return Unknown{"normalised integrand overflowed", qb.panels};
  const double err_b = qb.error + tail_b + 1e-15 * std::fabs(qb.estimate);
  if (!(err_b <= tol)) return Unknown{"normalised quadrature did not reach the tolerance", qb.panels};
  if (std::fabs(qa.estimate - qb.estimate) > 2 * tol) {
    std::ostringstream os;
    os.precision(17);
    os << "representations disagree: " << qa.estimate << " vs " << qb.estimate;
    return Unknown{os.str(), qa.panels + qb.panels};
  }
  out.normalized_estimate = qb.estimate;
  out.panels += qb.panels;
  return out;
}

std::vector<SequenceSymbol> verdict_sequence(const std::vector<Expr>& family, const Problem& problem,
                                             std::size_t budget) {
  std::vector<SequenceSymbol> out;
  out.reserve(family.size());
  for (const auto& h : family) {
    if (max_var(h) > 1) throw DomainError("family members must use only x1");
    ConvergenceVerdict v;
    if (problem.kind == Problem::Kind::Heat) {
      v = heat_classify({CauchyReciprocal2{h}}, problem.x0, problem.s0, budget);
    } else {
      v = electro_classify({Reciprocal2{h}}, problem.x0, problem.s0, budget);
    }
    out.push_back(std::holds_alternative<Finite>(v)      ? SequenceSymbol::Zero
                  : std::holds_alternative<Divergent>(v) ? SequenceSymbol::One
                                                         : SequenceSymbol::Bottom);
  }
  return out;
}

std::vector<Expr> parse_family(std::string_view text) {
  std::vector<Expr> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      out.push_back(parse_expr(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return out;
}

const char* outcome_name(const EvalOutcome& o) {
  switch (o.index()) {
    case 0:
      return "Value";
    case 1:
      return "Divergent";
    default:
      return "Unknown";
  }
}

char symbol_char(SequenceSymbol s) {
  switch (s) {
    case SequenceSymbol::Zero:
      return '0';
    case SequenceSymbol::One:
      return '1';
    case SequenceSymbol::Bottom:
      return '?';
  }
  return '?';
}

}  // namespace uncomp
