#pragma once

#include <string>

namespace uncomp {

// Planck constant in J*s (exact SI value).
inline constexpr long double kPlanck = 6.62607015e-34L;

// Bound t >= n^2 h / (2 pi E) on the time of an n-step computation with
// energy E.  Throws DomainError on nonpositive energy or time, or negative
// or non-finite arguments.
long double min_time(long double n, long double energy);
long double max_steps(long double time, long double energy);   // sqrt(2 pi E t / h)
long double min_energy(long double n, long double time);       // n^2 h / (2 pi t)
bool feasible(long double n, long double time, long double energy);

struct LimitsReport {
  long double h = kPlanck;
  long double n = 0;
  long double energy = 0;
  long double time = 0;  // 0 when not given
  bool has_time = false;
  long double min_time = 0;
  long double max_steps = 0;   // needs time
  long double min_energy = 0;  // needs time > 0
  bool feasible = false;       // needs time
};

LimitsReport limits_report(long double n, long double energy);
LimitsReport limits_report(long double n, long double energy, long double time);

}  // namespace uncomp
