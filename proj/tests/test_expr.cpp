#include <doctest.h>

#include <cmath>
#include <random>

#include "uncomp/error.hpp"
#include "uncomp/expr.hpp"
#include "uncomp/reference.hpp"

using namespace uncomp;

TEST_CASE("parsing builds the expected trees") {
  CHECK(parse_expr("sin(pi * x1)") == Expr::sin(Expr::mul(Expr::pi(), Expr::var(1))));
  CHECK(parse_expr("x1 + 1/2") == Expr::add(Expr::var(1), Expr::rational(1, 2)));
  CHECK(parse_expr("2/4") == Expr::rational(1, 2));
  CHECK(parse_expr("x1 + -3") == Expr::add(Expr::var(1), Expr::rational(-3)));
  CHECK(parse_expr("x1*x2", 2) == Expr::mul(Expr::var(1), Expr::var(2)));
  CHECK(parse_expr("1 + 2 * x1") == Expr::add(Expr::rational(1), Expr::mul(Expr::rational(2), Expr::var(1))));
}

TEST_CASE("parse errors report the offset") {
  try {
    parse_expr("x1 - 1");
    FAIL("subtraction must be rejected");
  } catch (const ParseError& e) {
    CHECK(e.location() == 3);
  }
  CHECK_THROWS_AS(parse_expr("x2"), ParseError);
  CHECK_THROWS_AS(parse_expr("sin(x1"), ParseError);
  CHECK_THROWS_AS(parse_expr("cos(x1)"), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("x1 x1"), ParseError);
}

TEST_CASE("to_string round-trips") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Expr e = reference::random_expr(rng, 4);
    CHECK(parse_expr(to_string(e)) == e);
  }
}

TEST_CASE("constant enclosures") {
  const Interval e0 = eval_interval(parse_expr("exp(x1)"), Interval::point(0.0));
  CHECK(e0.contains(1.0));
  CHECK(e0.width() <= 2 * std::nextafter(1.0, 2.0) - 2.0);
  CHECK(e0.width() == 0.0);

  const Interval pi = eval_interval(parse_expr("pi"), Interval::point(0.0));
  CHECK(pi.lo() >= 3.14159);
  CHECK(pi.hi() <= 3.1416);
  CHECK(pi.contains(M_PI));

  const Interval s = eval_interval(parse_expr("sin(pi)"), Interval::point(0.0));
  CHECK(s.contains_zero());
  CHECK(s.width() <= 1e-12);
}

TEST_CASE("interval arithmetic basics") {
  const Interval a(1.0, 2.0), b(-3.0, 0.5);
  CHECK((a + b).lo() <= -2.0);
  CHECK((a + b).hi() >= 2.5);
  CHECK((a * b).lo() <= -6.0);
  CHECK((a * b).hi() >= 1.0);
  CHECK(sqr(b).lo() == 0.0);
  CHECK(sin(Interval(0.0, 10.0)).lo() == -1.0);
  CHECK(sin(Interval(0.0, 10.0)).hi() == 1.0);
  CHECK(Interval(-2.0, 3.0).mig() == 0.0);
  CHECK(Interval(-5.0, -2.0).mig() == 2.0);
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK(sqrt(Interval(4.0, 9.0)).lo() <= 2.0);
  CHECK(sqrt(Interval(4.0, 9.0)).hi() >= 3.0);
}

TEST_CASE("containment against 50-digit evaluation") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> centre(-4.0, 4.0), lw(-8.0, 0.5), u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = reference::random_expr(rng, 4);
    const double m = centre(rng), w = std::pow(10.0, lw(rng));
    const Interval box(m - w / 2, m + w / 2);
    const Interval iv = eval_interval(e, box);
    for (int k = 0; k < 5; ++k) {
      const double x = std::clamp(box.lo() + w * u(rng), box.lo(), box.hi());
      CAPTURE(to_string(e));
      CAPTURE(x);
      CHECK(reference::encloses(iv, reference::eval_high_precision(e, x)));
      CHECK((std::isnan(eval_point(e, x)) || iv.contains(eval_point(e, x))));
    }
  }
}

TEST_CASE("jet encloses the derivative") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> centre(-3.0, 3.0);
  const reference::HighPrecision h("1e-25");
  for (int i = 0; i < 300; ++i) {
    const Expr e = reference::random_expr(rng, 3);
    const double m = centre(rng);
    const auto jet = eval_jet(e, Interval(m - 1e-3, m + 1e-3));
    const reference::HighPrecision x(m);
    const auto d = (reference::eval_high_precision(e, x + h) - reference::eval_high_precision(e, x - h)) / (2 * h);
    CAPTURE(to_string(e));
    CHECK(reference::encloses(Interval(jet.derivative.lo() - 1e-12 * (1 + jet.derivative.mag()),
                                       jet.derivative.hi() + 1e-12 * (1 + jet.derivative.mag())),
                              d));
  }
}

TEST_CASE("substitution") {
  const Expr s = parse_expr("sin(x1)");
  CHECK(substitute(s, 1, Expr::pi()) == parse_expr("sin(pi)"));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Expr e = reference::random_expr(rng, 3);
    CHECK(substitute(e, 1, Expr::var(1)) == e);
  }
  std::uniform_real_distribution<double> pt(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const Expr e = reference::random_expr(rng, 3);
    const Expr g = reference::random_expr(rng, 2);
    const Expr c = substitute(e, 1, g);
    for (int k = 0; k < 10; ++k) {
      const double x = pt(rng);
      const double direct = eval_point(c, x);
      const double composed = eval_point(e, eval_point(g, x));
      if (!std::isfinite(direct) || !std::isfinite(composed)) continue;
      CHECK(std::fabs(direct - composed) <= 1e-10 * std::max(1.0, std::fabs(composed)));
    }
  }
  CHECK_THROWS_AS(substitute(s, 2, Expr::pi()), DomainError);
}

TEST_CASE("two-variable boxes") {
  const Expr e = parse_expr("x1 * x2 + sin(x2)", 2);
  const Interval box[] = {Interval(1.0, 2.0), Interval(0.0, 1.0)};
  const Interval v = eval_interval(e, box);
  CHECK(v.lo() <= 0.0);
  CHECK(v.hi() >= 2.0 + std::sin(1.0));
  CHECK(max_var(e) == 2);
}
