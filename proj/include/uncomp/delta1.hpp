#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "uncomp/expr.hpp"
#include "uncomp/interval.hpp"

namespace uncomp {

struct Unknown {
  std::string reason;
  std::size_t work = 0;  // boxes or panels examined before giving up
};

// G(bracket.lo()) and G(bracket.hi()) are certified nonzero with opposite
// signs, so G has a root inside by continuity.
struct HasRoot {
  Interval bracket;
  int sign_at_lo = 0;
  std::size_t boxes = 0;
};

// |G| >= delta on every point of box.
struct NoRootInBox {
  Interval box;
  double delta = 0.0;
  std::size_t boxes = 0;
};

using RootVerdict = std::variant<HasRoot, NoRootInBox, Unknown>;

// Branch-and-prune on [-radius, radius].  Boxes are bisected breadth-first
// up to depth_budget levels.
RootVerdict find_root(const Expr& g, double radius, int depth_budget = 40);

// G changes sign inside root_bracket, which lies in neighbourhood, and
// |G'| <= lipschitz there.  Hence |G(x)| <= lipschitz * |x - r| for the root
// r, and any integrand w / G^2 with w >= weight_min on the neighbourhood is
// at least weight_min / (lipschitz^2 (x - r)^2) near r.
struct PoleCertificate {
  Interval root_bracket;
  Interval neighbourhood;
  double lipschitz = 0.0;
  double weight_min = 0.0;
};

// The integrand is at least exp(a y^2 + b y + c), and that exponent is >= 0
// for every y on the ray from ray_start in direction (+1 or -1).
// paper_bound marks the t0 > 1 inequality with a = 3/4.
struct ExponentCertificate {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double ray_start = 0.0;
  int direction = 1;
  bool paper_bound = false;
};

// The integrand is at least integrand_min > 0 on the ray.
struct RayCertificate {
  double ray_start = 0.0;
  int direction = 1;
  double integrand_min = 0.0;
};

using DivergenceCertificate = std::variant<PoleCertificate, ExponentCertificate, RayCertificate>;

// delta is a certified global lower bound on |G| when the bound came from
// one (0 otherwise).  upper_bound may be +inf if the certified bound
// overflowed; the integral is finite either way.
struct Finite {
  double upper_bound = 0.0;
  double delta = 0.0;
  std::size_t boxes = 0;
};

struct Divergent {
  DivergenceCertificate certificate;
};

using ConvergenceVerdict = std::variant<Finite, Divergent, Unknown>;

// Classifies the integral over R of 1 / ((x^2 + 1) G(x)^2).  The real line
// is covered by boxes split at x = tan(theta) points; budget caps the
// number of boxes evaluated.
ConvergenceVerdict integral_convergence(const Expr& g, std::size_t budget = 20000);

// Sign of G at x when the enclosure excludes 0, else 0.
int certified_sign(const Expr& g, double x);

// Shrinks a sign-change bracket by repeated splitting while the sign at the
// split point can be certified.
Interval refine_bracket(const Expr& g, Interval bracket, int sign_at_lo, int max_steps = 200);

// Tries to certify a pole of 1/G^2 inside box (finite endpoints with
// certified opposite signs).  weight_min is filled with a lower bound of
// 1/(x^2+1) over the box.
bool pole_certificate(const Expr& g, const Interval& box, PoleCertificate& out);

const char* verdict_name(const RootVerdict& v);
const char* verdict_name(const ConvergenceVerdict& v);

}  // namespace uncomp
