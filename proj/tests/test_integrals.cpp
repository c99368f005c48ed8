#include <doctest.h>

#include <cmath>

#include "uncomp/error.hpp"
#include "uncomp/integrals.hpp"
#include "uncomp/reference.hpp"

using namespace uncomp;

namespace {

Value value(const EvalOutcome& o) {
  REQUIRE_MESSAGE(std::holds_alternative<Value>(o), outcome_name(o));
  return std::get<Value>(o);
}

BoundaryFunction f(const char* text) { return parse_boundary(text); }

}  // namespace

TEST_CASE("boundary function syntax") {
  CHECK(std::holds_alternative<Builtin>(f("one").v));
  CHECK(std::holds_alternative<Reciprocal2>(f("recip2:x1").v));
  CHECK(std::holds_alternative<CauchyReciprocal2>(f("cauchy-recip2:exp(x1) + 1").v));
  CHECK(std::holds_alternative<Linear>(f("combo:2*one+-1*cauchy").v));
  CHECK(std::holds_alternative<Delta1Fn>(f("sin(x1)").v));
  CHECK_THROWS_AS(f("recip2:x1 - 1"), ParseError);
  CHECK_THROWS_AS(f("combo:2*sin"), ParseError);
  CHECK(eval_boundary(f("cauchy"), 1.0) == 0.5);
  CHECK(eval_boundary(f("recip2:x1 + 1"), 1.0) == 0.25);
  for (const char* t : {"one", "cauchy", "gauss_sq", "recip2:x1", "cauchy-recip2:exp(x1) + 1", "combo:2*one+-1*cauchy"}) {
    CHECK(to_string(parse_boundary(to_string(f(t)))) == to_string(f(t)));
  }
}

TEST_CASE("heat kernel normalisation on a grid") {
  for (int i = 0; i < 10; ++i) {
    const double x0 = -4.0 + 0.9 * i, t0 = 0.01 + 0.8 * i;
    const Value v = value(heat_eval(f("one"), x0, t0));
    CHECK(std::fabs(v.estimate - 1.0) <= 1e-6);
    CHECK(v.error_bound <= 1e-6);
  }
}

TEST_CASE("heat kernel against closed forms") {
  const double oracle = std::sqrt(M_PI) / 2 * std::exp(0.25) * std::erfc(0.5);
  CHECK(std::fabs(oracle - reference::heat_cauchy_at_origin(1.0)) < 1e-15);
  CHECK(std::fabs(value(heat_eval(f("cauchy"), 0.0, 1.0)).estimate - 0.545640) <= 1e-5);
  for (double t0 : {0.1, 0.5, 2.0, 10.0}) {
    const Value v = value(heat_eval(f("cauchy"), 0.0, t0));
    CHECK(std::fabs(v.estimate - reference::heat_cauchy_at_origin(t0)) <= 1e-6);
  }
  for (double x0 : {0.0, 1.0, -2.0}) {
    for (double t0 : {0.05, 0.1, 0.2}) {
      // Absolute tolerance scaled to the magnitude; e^20 is beyond 1e-6 absolute.
      const double truth = reference::heat_gauss_sq(x0, t0);
      const Value v = value(heat_eval(f("gauss_sq"), x0, t0, 1e-6 * std::max(1.0, truth)));
      CHECK(std::fabs(v.estimate - truth) <= 1e-6 * std::max(1.0, truth));
    }
  }
}

TEST_CASE("heat kernel divergence with the explicit exponent bound") {
  const auto o = heat_eval(f("gauss_sq"), 0.0, 2.0);
  REQUIRE(std::holds_alternative<Divergent>(o));
  const auto& c = std::get<ExponentCertificate>(std::get<Divergent>(o).certificate);
  CHECK(c.paper_bound);
  CHECK(c.a == 0.75);
  CHECK(c.b == 0.0);
  CHECK(c.c == 0.0);
  const auto o2 = heat_eval(f("gauss_sq"), 1.5, 3.0);
  REQUIRE(std::holds_alternative<Divergent>(o2));
  const auto& c2 = std::get<ExponentCertificate>(std::get<Divergent>(o2).certificate);
  CHECK(c2.b == 0.75);
  CHECK(c2.c == -1.5 * 1.5 / 4);
  // Between 1/4 and 1 the exact exponent is used instead.
  const auto o3 = heat_eval(f("gauss_sq"), 0.0, 0.5);
  REQUIRE(std::holds_alternative<Divergent>(o3));
  CHECK_FALSE(std::get<ExponentCertificate>(std::get<Divergent>(o3).certificate).paper_bound);
}

TEST_CASE("heat classification") {
  CHECK(std::holds_alternative<Finite>(heat_classify(f("cauchy"), 0.3, 5.0)));
  CHECK(std::holds_alternative<Finite>(heat_classify(f("cauchy-recip2:exp(x1) + 1"), 0.0, 1.0)));
  CHECK(std::holds_alternative<Divergent>(heat_classify(f("gauss_sq"), 0.0, 2.0)));
  CHECK(std::holds_alternative<Divergent>(heat_classify(f("cauchy-recip2:x1"), 0.0, 1.0)));
  const Value v = value(heat_eval(f("cauchy-recip2:exp(x1) + 1"), 0.0, 1.0));
  CHECK(v.estimate > 0.0);
  CHECK(v.estimate < 0.545640);
}

TEST_CASE("heat preconditions") {
  CHECK_THROWS_AS(heat_eval(f("one"), 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(heat_eval(f("one"), 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("Poisson kernel normalisation and closed form") {
  for (int i = 0; i < 10; ++i) {
    const double x0 = -3.0 + 0.7 * i, y0 = (i % 2 ? 1 : -1) * (0.05 + 0.5 * i);
    const Value v = value(electro_eval(f("one"), x0, y0));
    CHECK(std::fabs(v.estimate - (y0 > 0 ? 1.0 : -1.0)) <= 1e-6);
  }
  CHECK(std::fabs(value(electro_eval(f("cauchy"), 0.0, 1.0)).estimate - 0.5) <= 1e-6);
  for (double x0 : {-2.0, 0.0, 0.5, 3.0}) {
    for (double y0 : {0.1, 1.0, 4.0}) {
      const Value v = value(electro_eval(f("cauchy"), x0, y0));
      CHECK(std::fabs(v.estimate - reference::electro_cauchy(x0, y0)) <= 1e-6);
    }
  }
}

TEST_CASE("both Poisson representations agree") {
  for (const char* t : {"one", "cauchy", "recip2:exp(x1) + 1", "sin(x1)", "combo:3*cauchy+1*one"}) {
    for (double x0 : {0.0, 1.3}) {
      const Value v = value(electro_eval(f(t), x0, 0.7, 1e-6, true));
      REQUIRE(v.normalized_estimate.has_value());
      CHECK(std::fabs(v.estimate - *v.normalized_estimate) <= 2e-6);
    }
  }
}

TEST_CASE("Poisson divergence") {
  const auto o = electro_eval(f("recip2:x1"), 0.0, 1.0);
  REQUIRE(std::holds_alternative<Divergent>(o));
  CHECK(std::holds_alternative<PoleCertificate>(std::get<Divergent>(o).certificate));
  const auto g = electro_eval(f("gauss_sq"), 0.0, 1.0);
  REQUIRE(std::holds_alternative<Divergent>(g));
  CHECK(std::holds_alternative<RayCertificate>(std::get<Divergent>(g).certificate));
  CHECK_THROWS_AS(electro_eval(f("one"), 0.0, 0.0), DomainError);
}

TEST_CASE("maximum principle") {
  // cauchy has range (0, 1]; sin has range [-1, 1].
  for (double x0 : {-1.0, 0.0, 2.0}) {
    for (double s : {0.2, 1.0, 3.0}) {
      const double u = value(heat_eval(f("cauchy"), x0, s)).estimate;
      CHECK(u >= -1e-6);
      CHECK(u <= 1 + 1e-6);
      const double p = value(electro_eval(f("sin(x1)"), x0, s)).estimate;
      CHECK(p >= -1 - 1e-6);
      CHECK(p <= 1 + 1e-6);
    }
  }
}

TEST_CASE("linearity on builtin combinations") {
  const double tol = 1e-6;
  for (double x0 : {0.0, 0.8}) {
    const double one = value(heat_eval(f("one"), x0, 0.6, tol)).estimate;
    const double cauchy = value(heat_eval(f("cauchy"), x0, 0.6, tol)).estimate;
    const double combo = value(heat_eval(f("combo:2*one+-3*cauchy"), x0, 0.6, tol)).estimate;
    CHECK(std::fabs(combo - (2 * one - 3 * cauchy)) <= 3 * tol);
    const double e1 = value(electro_eval(f("one"), x0, 0.6, tol)).estimate;
    const double e2 = value(electro_eval(f("cauchy"), x0, 0.6, tol)).estimate;
    const double ec = value(electro_eval(f("combo:2*one+-3*cauchy"), x0, 0.6, tol)).estimate;
    CHECK(std::fabs(ec - (2 * e1 - 3 * e2)) <= 3 * tol);
  }
}

TEST_CASE("verdict sequences") {
  const auto ones = parse_family("1\n1\n# comment\n\n1\n");
  REQUIRE(ones.size() == 3);
  for (auto kind : {Problem::Kind::Heat, Problem::Kind::Electro}) {
    for (auto s : verdict_sequence(ones, {kind, 0.0, 1.0})) CHECK(s == SequenceSymbol::Zero);
  }
  const auto alt = parse_family("exp(x1) + 1\nx1\nexp(x1) + 1\nx1\n");
  for (auto kind : {Problem::Kind::Heat, Problem::Kind::Electro}) {
    const auto seq = verdict_sequence(alt, {kind, 0.0, 1.0});
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == SequenceSymbol::Zero);
    CHECK(seq[1] == SequenceSymbol::One);
    CHECK(seq[2] == SequenceSymbol::Zero);
    CHECK(seq[3] == SequenceSymbol::One);
  }
  CHECK(symbol_char(SequenceSymbol::Bottom) == '?');
}

TEST_CASE("decided symbols survive larger budgets") {
  const auto fam = parse_family("exp(x1) + 1\nx1\nsin(x1)\nx1*x1 + 1\nexp(x1)\nsin(x1) + 2\nx1 + -1000\n");
  std::vector<SequenceSymbol> decided(fam.size(), SequenceSymbol::Bottom);
  for (std::size_t budget : {20, 100, 1000, 20000}) {
    const auto seq = verdict_sequence(fam, {Problem::Kind::Heat, 0.0, 1.0}, budget);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (decided[i] != SequenceSymbol::Bottom) CHECK(seq[i] == decided[i]);
      if (seq[i] != SequenceSymbol::Bottom) decided[i] = seq[i];
    }
  }
}
