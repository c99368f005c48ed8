#include <doctest.h>

#include <cmath>
#include <random>

#include "uncomp/error.hpp"
#include "uncomp/limits.hpp"

using namespace uncomp;

TEST_CASE("worked values") {
  CHECK(min_time(0, 1) == 0);
  const double hbar = static_cast<double>(min_time(1, 1));
  CHECK(std::fabs(hbar - 1.0545718176461565e-34) <= std::nextafter(1.0545718176461565e-34, 1.0) - 1.0545718176461565e-34);
  const double e = static_cast<double>(min_energy(1e30L, 4.35e17L));
  CHECK(e == doctest::Approx(2.4243e8).epsilon(1e-4));
  CHECK(kPlanck == 6.62607015e-34L);
}

TEST_CASE("feasibility is the rearranged inequality") {
  const long double t = min_time(1e6L, 2.0L);
  CHECK(feasible(1e6L, t * 1.000001L, 2.0L));
  CHECK_FALSE(feasible(1e6L, t * 0.999999L, 2.0L));
  CHECK(feasible(0, 0, 1));
}

TEST_CASE("round trip within one ulp") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ln(0.0, 15.0), le(-20.0, 20.0);
  for (int i = 0; i < 5000; ++i) {
    const double n = std::floor(std::pow(10.0, ln(rng)));
    const long double energy = std::pow(10.0L, static_cast<long double>(le(rng)));
    const double back = static_cast<double>(max_steps(min_time(n, energy), energy));
    CAPTURE(n);
    CHECK(std::fabs(back - n) <= std::nextafter(n, HUGE_VAL) - n);
  }
}

TEST_CASE("monotonicity") {
  for (long double n = 1; n < 1e15L; n *= 7.3L) {
    CHECK(min_time(n + 1, 1) > min_time(n, 1));
    CHECK(min_time(n, 3) < min_time(n, 2));
  }
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(min_time(1, 0), DomainError);
  CHECK_THROWS_AS(min_time(1, -1), DomainError);
  CHECK_THROWS_AS(min_time(-1, 1), DomainError);
  CHECK_THROWS_AS(max_steps(-1, 1), DomainError);
  CHECK_THROWS_AS(min_energy(1, 0), DomainError);
  CHECK_THROWS_AS(limits_report(1, 1, 0), DomainError);
  const auto r = limits_report(10, 1, 1);
  CHECK(r.has_time);
  CHECK(r.feasible);
  CHECK(r.h == kPlanck);
}
