#include "uncomp/limits.hpp"

#include <cmath>
#include <numbers>

#include "uncomp/error.hpp"

namespace uncomp {

namespace {

constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;

void require_positive(long double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

void require_natural(long double n) {
  if (!(n >= 0) || !std::isfinite(n)) throw DomainError("step count must be nonnegative and finite");
}

}  // namespace

long double min_time(long double n, long double energy) {
  require_natural(n);
  require_positive(energy, "energy");
  return n * n * kPlanck / (kTwoPi * energy);
}

long double max_steps(long double time, long double energy) {
  require_positive(energy, "energy");
  if (!(time >= 0) || !std::isfinite(time)) throw DomainError("time must be nonnegative and finite");
  return std::sqrt(kTwoPi * energy * time / kPlanck);
}

long double min_energy(long double n, long double time) {
  require_natural(n);
  require_positive(time, "time");
  return n * n * kPlanck / (kTwoPi * time);
}

bool feasible(long double n, long double time, long double energy) {
  if (!(time >= 0) || !std::isfinite(time)) throw DomainError("time must be nonnegative and finite");
  return time >= min_time(n, energy);
}

LimitsReport limits_report(long double n, long double energy) {
  LimitsReport r;
  r.n = n;
  r.energy = energy;
  r.min_time = min_time(n, energy);
  return r;
}

LimitsReport limits_report(long double n, long double energy, long double time) {
  LimitsReport r = limits_report(n, energy);
  r.time = time;
  r.has_time = true;
  r.max_steps = max_steps(time, energy);
  r.min_energy = min_energy(n, time);
  r.feasible = feasible(n, time, energy);
  return r;
}

}  // namespace uncomp
