#include <doctest.h>

#include <cmath>
#include <random>

#include "uncomp/delta1.hpp"
#include "uncomp/error.hpp"
#include "uncomp/reference.hpp"

using namespace uncomp;

TEST_CASE("sin has a certified root in [-4, 4]") {
  const Expr g = parse_expr("sin(x1)");
  const auto v = find_root(g, 4.0);
  REQUIRE(std::holds_alternative<HasRoot>(v));
  const auto& h = std::get<HasRoot>(v);
  const bool near_root = h.bracket.contains(0.0) || std::fabs(std::fabs(h.bracket.mid()) - M_PI) < 1e-9;
  CHECK(near_root);
  CHECK(h.bracket.width() < 1e-9);
  CHECK(reference::verify_has_root(g, h));
}

TEST_CASE("exp has no root in [-10, 10]") {
  const Expr g = parse_expr("exp(x1)");
  const auto v = find_root(g, 10.0);
  REQUIRE(std::holds_alternative<NoRootInBox>(v));
  const auto& n = std::get<NoRootInBox>(v);
  // The bound is e^-10 less a few ulps of outward rounding.
  CHECK(n.delta <= std::exp(-10.0));
  CHECK(n.delta >= std::exp(-10.0) * (1 - 1e-14));
  CHECK(reference::verify_no_root(g, n, 40));
}

TEST_CASE("a touching root stays Unknown") {
  CHECK(std::holds_alternative<Unknown>(find_root(parse_expr("sin(x1)*sin(x1)"), 4.0)));
}

TEST_CASE("find_root preconditions") {
  CHECK_THROWS_AS(find_root(parse_expr("x1"), 0.0), DomainError);
  CHECK_THROWS_AS(find_root(parse_expr("x1"), INFINITY), DomainError);
  CHECK_THROWS_AS(find_root(parse_expr("x1*x2", 2), 1.0), DomainError);
}

TEST_CASE("convergence verdicts") {
  const auto x = integral_convergence(parse_expr("x1"));
  REQUIRE(std::holds_alternative<Divergent>(x));
  const auto& pole = std::get<PoleCertificate>(std::get<Divergent>(x).certificate);
  CHECK(pole.root_bracket.contains(0.0));
  CHECK(reference::verify_pole(parse_expr("x1"), pole));

  const auto e = integral_convergence(parse_expr("exp(x1) + 1"));
  REQUIRE(std::holds_alternative<Finite>(e));
  CHECK(std::get<Finite>(e).upper_bound <= M_PI * (1 + 1e-15));
  CHECK(std::get<Finite>(e).upper_bound >= M_PI * (1 - 1e-15));

  const auto s = integral_convergence(parse_expr("sin(x1)"));
  REQUIRE(std::holds_alternative<Divergent>(s));
  CHECK(reference::verify_pole(parse_expr("sin(x1)"), std::get<PoleCertificate>(std::get<Divergent>(s).certificate)));

  const auto q = integral_convergence(parse_expr("x1*x1 + 1"));
  REQUIRE(std::holds_alternative<Finite>(q));
  // True value is pi/2 * 3/2 = 2.356...
  CHECK(std::get<Finite>(q).upper_bound >= 3 * M_PI / 4);
}

TEST_CASE("verdicts never flip as the budget grows") {
  const char* suite[] = {"x1", "exp(x1) + 1", "sin(x1)", "x1*x1 + 1", "exp(x1)", "x1 + -1000", "sin(x1) + 2"};
  for (const char* text : suite) {
    const Expr g = parse_expr(text);
    std::string decided;
    for (std::size_t budget : {50, 200, 1000, 5000, 20000}) {
      const std::string name = verdict_name(integral_convergence(g, budget));
      if (!decided.empty()) CHECK(name == decided);
      if (name != "Unknown") decided = name;
    }
    std::string root_decided;
    for (int depth : {5, 10, 20, 40}) {
      const std::string name = verdict_name(find_root(g, 4.0, depth));
      if (!root_decided.empty()) CHECK(name == root_decided);
      if (name != "Unknown") root_decided = name;
    }
  }
}

TEST_CASE("random verdicts re-verify at 50 digits") {
  std::mt19937_64 rng(9);
  int decided = 0;
  for (int i = 0; i < 60; ++i) {
    const Expr g = reference::random_expr(rng, 3);
    if (max_var(g) != 1) continue;
    CAPTURE(to_string(g));
    const auto rv = find_root(g, 3.0, 30);
    if (const auto* h = std::get_if<HasRoot>(&rv)) {
      ++decided;
      CHECK(reference::verify_has_root(g, *h));
    } else if (const auto* n = std::get_if<NoRootInBox>(&rv)) {
      ++decided;
      CHECK(reference::verify_no_root(g, *n, 30));
    }
    const auto cv = integral_convergence(g, 2000);
    if (const auto* d = std::get_if<Divergent>(&cv)) {
      ++decided;
      CHECK(reference::verify_pole(g, std::get<PoleCertificate>(d->certificate)));
    }
  }
  CHECK(decided > 20);
}

TEST_CASE("certified_sign and refine_bracket") {
  const Expr g = parse_expr("x1 + -1/3");
  CHECK(certified_sign(g, 0.0) == -1);
  CHECK(certified_sign(g, 1.0) == 1);
  const Interval b = refine_bracket(g, Interval(0.0, 1.0), -1);
  CHECK(b.contains(1.0 / 3.0));
  CHECK(b.width() < 1e-15);
}
