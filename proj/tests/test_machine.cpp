#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "uncomp/error.hpp"
#include "uncomp/machine.hpp"

using namespace uncomp;

namespace {

const char* kEcho = "READ r0\nWRITE r0\nHALT";

BitString bits(const char* s) { return BitString::parse(s); }

}  // namespace

TEST_CASE("assembly parsing") {
  CHECK(parse_machine("HALT").size() == 1);
  const auto echo = parse_machine(kEcho);
  CHECK(echo.size() == 3);
  CHECK(echo.instructions()[0].op == Opcode::Read);
  CHECK_FALSE(echo.probabilistic());
  CHECK(parse_machine("COIN r0; WRITE r0; HALT").probabilistic());
  CHECK(parse_machine("a: READ r1 # comment\nJZ r1 a\nHALT") == parse_machine("READ r1; JZ r1 0; HALT"));
}

TEST_CASE("assembly errors carry the line") {
  try {
    parse_machine("JMP nowhere");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unresolved label") != std::string::npos);
    CHECK(e.location() == 1);
  }
  try {
    parse_machine("HALT\nFOO r1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == 2);
  }
  CHECK_THROWS_AS(parse_machine("READ r8; HALT"), ParseError);
  CHECK_THROWS_AS(parse_machine("READ r0"), ParseError);
  CHECK_THROWS_AS(parse_machine(""), ParseError);
}

TEST_CASE("format_machine round-trips") {
  gen::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto d = gen::machine(rng, 10, true);
    CHECK(parse_machine(format_machine(d)) == d);
  }
}

TEST_CASE("exact-consumption runs") {
  const auto halt = parse_machine("HALT");
  CHECK(run(halt, bits(""), 10) == RunResult{Halted{bits(""), 1, 0}});
  const auto r = run(halt, bits("0"), 10);
  REQUIRE(std::holds_alternative<NotInDomain>(r));
  CHECK(std::get<NotInDomain>(r).reason == NotInDomainReason::UnconsumedInput);

  const auto echo = parse_machine(kEcho);
  CHECK(run(echo, bits("1"), 10) == RunResult{Halted{bits("1"), 3, 1}});
  const auto empty = run(echo, bits(""), 10);
  REQUIRE(std::holds_alternative<NotInDomain>(empty));
  CHECK(std::get<NotInDomain>(empty).reason == NotInDomainReason::InputExhausted);
}

TEST_CASE("budgets and loop proofs") {
  const auto spin = parse_machine("l: INC r0; JMP l; HALT");
  CHECK(std::holds_alternative<BudgetExceeded>(run(spin, bits(""), 1000)));
  const auto capped = run(spin, bits(""), 100000, RegisterMode::capped(64));
  REQUIRE(std::holds_alternative<LoopProved>(capped));
  CHECK(std::get<LoopProved>(capped).period >= 1);
  CHECK_THROWS_AS(run(spin, bits(""), 0), DomainError);
  CHECK_THROWS_AS(run(parse_machine("COIN r0; HALT"), bits(""), 10), DomainError);
}

TEST_CASE("domain is prefix-free for random machines") {
  gen::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto d = gen::machine(rng);
    for (int k = 0; k < 20; ++k) {
      const BitString x = gen::bits(rng, 8);
      if (!is_halted(run(d, x, 10000, RegisterMode::capped()))) continue;
      const BitString y = x + gen::bits(rng, 4);
      if (y == x) continue;
      CHECK_FALSE(is_halted(run(d, y, 10000, RegisterMode::capped())));
    }
  }
}

TEST_CASE("Elias-gamma encoding") {
  CHECK(elias_gamma(1).str() == "1");
  CHECK(elias_gamma(5).str() == "00101");
  for (std::uint64_t n = 1; n < 5000; ++n) {
    CHECK(elias_gamma_length(n) == 2 * static_cast<std::size_t>(std::floor(std::log2(n))) + 1);
    CHECK(elias_gamma(n).size() == elias_gamma_length(n));
  }
}

TEST_CASE("machine encoding") {
  const auto halt = parse_machine("HALT");
  const Program h = encode_machine(halt);
  // One-bit body "0" behind gamma(1) = "1".
  CHECK(h.str() == "10");
  const auto echo = parse_machine(kEcho);
  REQUIRE(decode_machine(encode_machine(echo)).has_value());
  CHECK(*decode_machine(encode_machine(echo)) == echo);

  gen::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto d = gen::machine(rng, 12, true);
    const Program p = encode_machine(d);
    const auto back = decode_machine(p);
    REQUIRE(back.has_value());
    CHECK(*back == d);
    CHECK_FALSE(decode_machine(p + bits("0")).has_value());
  }
}

TEST_CASE("encoded length is |b| + 2 floor(log2 |b|) + 1") {
  gen::Rng rng(5);
  int seen5 = 0;
  for (int i = 0; i < 2000; ++i) {
    const Program p = encode_machine(gen::machine(rng, 6));
    // Recover |b| from the gamma header: count leading zeros.
    std::size_t z = 0;
    while (!p[z]) ++z;
    const std::size_t b = p.size() - (2 * z + 1);
    CHECK(p.size() == b + 2 * static_cast<std::size_t>(std::floor(std::log2(b))) + 1);
    if (b == 5) {
      ++seen5;
      CHECK(p.size() == 10);
    }
  }
  CHECK(seen5 > 0);
}

TEST_CASE("universal machine simulates encoded machines") {
  const auto echo = parse_machine(kEcho);
  const Program x = encode_machine(echo) + bits("1");
  const auto r = universal_run(x, 1000);
  REQUIRE(is_halted(r));
  CHECK(as_halted(r)->output == bits("1"));
  CHECK(as_halted(r)->consumed == x.size());
  // 16 decoded bits plus 3 simulated instructions.
  CHECK(as_halted(r)->steps == 19);
  CHECK(as_halted(r)->steps > 3);

  gen::Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto d = gen::machine(rng);
    const Program code = encode_machine(d);
    for (int k = 0; k < 10; ++k) {
      const BitString in = gen::bits(rng, 6);
      const auto direct = run(d, in, 5000, RegisterMode::capped());
      const auto viaU = universal_run(code + in, 5000 + code.size(), RegisterMode::capped());
      CHECK(is_halted(direct) == is_halted(viaU));
      if (const auto* h = as_halted(direct)) {
        CHECK(as_halted(viaU)->output == h->output);
        CHECK(as_halted(viaU)->steps == h->steps + code.size());
        CHECK(as_halted(viaU)->consumed == h->consumed + code.size());
      }
    }
  }
}

TEST_CASE("universal machine rejects invalid headers and COIN") {
  const auto r = universal_run(bits("0"), 100);
  CHECK_FALSE(is_halted(r));
  const auto coin = universal_run(encode_machine(parse_machine("COIN r0; HALT")), 100);
  REQUIRE(std::holds_alternative<NotInDomain>(coin));
  CHECK(std::get<NotInDomain>(coin).reason == NotInDomainReason::InvalidEncoding);
}

TEST_CASE("domain_inputs returns inputs in the domain, in order") {
  const auto d = parse_machine("loop: READ r0; JZ r0 done; READ r1; WRITE r1; JMP loop; done: HALT");
  const auto xs = domain_inputs(d, 20, 10000);
  REQUIRE(xs.size() == 20);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(is_halted(run(d, xs[i], 10000)));
    if (i > 0) CHECK(xs[i - 1] < xs[i]);
  }
  CHECK(xs.front().str() == "0");
}

TEST_CASE("Monte Carlo on a fair coin stays within 3 sigma") {
  const auto d = parse_machine("COIN r0; WRITE r0; HALT");
  const std::uint64_t n = 10000;
  const auto mc = monte_carlo_run(d, bits(""), n, 12345);
  CHECK(mc.trials == n);
  const double p = mc.frequency(bits("0"));
  const double sigma = std::sqrt(0.25 / n);
  CHECK(std::fabs(p - 0.5) <= 3 * sigma);
  CHECK(std::fabs(p - 0.5) <= 0.02);
  CHECK(mc.outputs.at(bits("0")) + mc.outputs.at(bits("1")) == n);
}

TEST_CASE("Monte Carlo seeding and deterministic machines") {
  const auto echo = parse_machine(kEcho);
  const auto mc = monte_carlo_run(echo, bits("1"), 50, 7);
  REQUIRE(mc.outputs.size() == 1);
  CHECK(mc.frequency(bits("1")) == 1.0);

  const auto coin = parse_machine("COIN r0; COIN r1; WRITE r0; WRITE r1; HALT");
  const auto a = monte_carlo_run(coin, bits(""), 1, 99);
  const auto b = monte_carlo_run(coin, bits(""), 1, 99);
  CHECK(a.outputs == b.outputs);
  CHECK(a.outputs.size() == 1);
  CHECK_THROWS_AS(monte_carlo_run(coin, bits(""), 0, 1), DomainError);
}
