#include <doctest.h>

#include <set>

#include "uncomp/enumeration.hpp"
#include "uncomp/error.hpp"
#include "uncomp/reference.hpp"

using namespace uncomp;

namespace {

EnumerationReport enumerate(unsigned max_len, std::uint64_t budget = 100000,
                            RegisterMode mode = RegisterMode::capped(), unsigned jobs = 1) {
  EnumerationOptions o;
  o.max_len = max_len;
  o.budget = budget;
  o.mode = mode;
  o.jobs = jobs;
  return enumerate_domain(o);
}

}  // namespace

TEST_CASE("max_len 0 classifies only the empty string") {
  const auto r = enumerate(0);
  REQUIRE(r.classified.size() == 1);
  CHECK(r.classified[0].program.empty());
  const auto b = omega_bounds(r);
  CHECK(b.lower == Dyadic(0, 0));
}

TEST_CASE("Dyadic arithmetic") {
  CHECK(Dyadic(2, 2) == Dyadic(1, 1));
  CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));
  CHECK(Dyadic(3, 2).to_string() == "3/2^2");
  CHECK(Dyadic(3, 2).to_double() == 0.75);
}

TEST_CASE("enumeration agrees with running every string") {
  for (unsigned len : {8u, 12u}) {
    const auto fast = enumerate(len);
    const auto slow = reference::all_runs(len, 100000, RegisterMode::capped());
    std::map<std::string, RunResult> expect;
    for (const auto& c : slow) expect.emplace(c.program.str(), c.result);
    std::size_t halted_fast = 0, halted_slow = 0;
    for (const auto& c : slow) halted_slow += is_halted(c.result);
    for (const auto& c : fast.classified) {
      if (!is_halted(c.result)) continue;
      ++halted_fast;
      CHECK(expect.at(c.program.str()) == c.result);
    }
    CHECK(halted_fast == halted_slow);
  }
}

TEST_CASE("classified programs are in length-then-lex order") {
  const auto r = enumerate(10);
  for (std::size_t i = 1; i < r.classified.size(); ++i) {
    CHECK(r.classified[i - 1].program < r.classified[i].program);
  }
}

TEST_CASE("capped mode at length 12 resolves every program") {
  const auto r = enumerate(12);
  CHECK(r.unresolved.empty());
  CHECK(r.exact());
  const auto b = omega_bounds(r);
  CHECK(b.lower == Dyadic(1275, 12));
  CHECK(b.upper == b.lower);
  CHECK(b.valid_at_scale);
}

TEST_CASE("omega lower bound is monotone in max_len and budget") {
  Dyadic prev;
  for (unsigned len = 0; len <= 14; ++len) {
    const auto d = omega_bounds(enumerate(len)).lower;
    CHECK(prev <= d);
    prev = d;
  }
  Dyadic prev_b;
  for (std::uint64_t budget : {1, 3, 10, 30, 100, 1000}) {
    const auto d = omega_bounds(enumerate(12, budget, RegisterMode::unbounded())).lower;
    CHECK(prev_b <= d);
    prev_b = d;
  }
}

TEST_CASE("unbounded mode with a small budget leaves a gap") {
  const auto r = enumerate(12, 20, RegisterMode::unbounded());
  const auto b = omega_bounds(r);
  CHECK(b.lower <= b.upper);
  CHECK_FALSE(r.exact());
}

TEST_CASE("h_upper") {
  const auto r = enumerate(12);
  // The HALT machine encodes as "10" and outputs the empty string.
  REQUIRE(h_upper(BitString(), r).has_value());
  CHECK(*h_upper(BitString(), r) == 2);
  CHECK_FALSE(h_upper(BitString::parse("1111111111"), r).has_value());
  for (const auto& c : r.classified) {
    if (const auto* h = as_halted(c.result)) CHECK(*h_upper(h->output, r) <= c.program.size());
  }
}

TEST_CASE("sigma_hat and bb_time") {
  const auto r = enumerate(12);
  CHECK_FALSE(sigma_hat(1, r).value.has_value());
  CHECK_FALSE(bb_time(1, r).has_value());
  CHECK(bb_time(2, r) == 3u);
  const auto s10 = sigma_hat(10, r);
  REQUIRE(s10.value.has_value());
  CHECK(s10.exact);
  CHECK(*s10.value == 1);
  CHECK(bb_time(10, r) == 12u);
  CHECK_THROWS_AS(sigma_hat(13, r), DomainError);

  BigNat prev = -1;
  std::uint64_t prev_t = 0;
  for (unsigned n = 0; n <= 12; ++n) {
    if (const auto s = sigma_hat(n, r).value) {
      CHECK(*s >= prev);
      prev = *s;
    }
    if (const auto t = bb_time(n, r)) {
      CHECK(*t >= prev_t);
      prev_t = *t;
    }
  }
}

TEST_CASE("halting-time constant") {
  const auto table = sigma_table(enumerate(12));
  const auto c = halting_time_constant(table);
  REQUIRE(c.has_value());
  CHECK(*c == 10);
  for (const auto& row : table) {
    if (row.bb_time && row.n + *c <= 12) CHECK(BigNat(*row.bb_time) <= *table[row.n + *c].sigma_hat);
  }
  if (*c > 0) {
    bool fails = false;
    for (const auto& row : table) {
      if (row.bb_time && row.n + *c - 1 <= 12) {
        const auto& s = table[row.n + *c - 1].sigma_hat;
        if (!s || BigNat(*row.bb_time) > *s) fails = true;
      }
    }
    CHECK(fails);
  }
}

TEST_CASE("tables are identical across worker counts") {
  const std::string one = sigma_table_csv(sigma_table(enumerate(16, 100000, RegisterMode::capped(), 1)));
  const std::string again = sigma_table_csv(sigma_table(enumerate(16, 100000, RegisterMode::capped(), 1)));
  const std::string many = sigma_table_csv(sigma_table(enumerate(16, 100000, RegisterMode::capped(), 4)));
  CHECK(one == again);
  CHECK(one == many);
}

TEST_CASE("enumeration rejects bad options") {
  CHECK_THROWS_AS(enumerate(kMaxEnumerationLength + 1), DomainError);
  CHECK_THROWS_AS(enumerate(4, 0), DomainError);
}
