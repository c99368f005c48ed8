#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace uncomp {

struct QuadratureResult {
  double estimate = 0.0;
  double error = 0.0;  // sum of |K15 - G7| over the final panels
  std::size_t panels = 0;
  bool converged = false;  // error <= tol
  bool finite = true;      // false if the integrand produced inf/nan
};

// Adaptive Gauss-Kronrod (7/15) over consecutive breakpoints.  The panel
// with the largest error is bisected until the total error is <= tol or
// max_panels is reached.  Panel results are summed in left-to-right order,
// so the result depends only on the final panel set.
QuadratureResult integrate(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, double tol,
                           std::size_t max_panels = 1 << 16);

}  // namespace uncomp
