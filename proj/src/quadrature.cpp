#include "uncomp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "uncomp/error.hpp"

namespace uncomp {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082,
                           0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975,
                           0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool finite;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  bool finite = std::isfinite(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    finite = finite && std::isfinite(f1) && std::isfinite(f2);
    k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, k * h, std::fabs((k - g) * h), finite};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, double tol,
                           std::size_t max_panels) {
  if (breakpoints.size() < 2) throw DomainError("quadrature needs at least two breakpoints");
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");

  auto by_error = [](const Panel& x, const Panel& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> heap(by_error);
  QuadratureResult res;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(a < b)) throw DomainError("breakpoints must be strictly increasing");
    Panel p = gk15(f, a, b);
    if (!p.finite) res.finite = false;
    total_error += p.error;
    heap.push(p);
  }

  while (res.finite && total_error > tol && heap.size() < max_panels) {
    Panel worst = heap.top();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(worst.a < m && m < worst.b)) break;
    heap.pop();
    Panel l = gk15(f, worst.a, m);
    Panel r = gk15(f, m, worst.b);
    if (!l.finite || !r.finite) res.finite = false;
    total_error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }

  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  // Neumaier summation; errors are recomputed in the same order.
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const auto& p : panels) {
    const double t = sum + p.value;
    comp += std::fabs(sum) >= std::fabs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
    sum = t;
    err += p.error;
  }
  res.estimate = sum + comp;
  res.error = err;
  res.panels = panels.size();
  res.converged = res.finite && err <= tol;
  return res;
}

}  // namespace uncomp
