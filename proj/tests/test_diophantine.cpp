#include <doctest.h>

#include "uncomp/diophantine.hpp"
#include "uncomp/error.hpp"
#include "uncomp/repro.hpp"

using namespace uncomp;

TEST_CASE("family parsing") {
  const auto f = parse_diophantine("params: a; unknowns: x, y; x^2 + a = y");
  CHECK(f.params == std::vector<std::string>{"a"});
  CHECK(f.unknowns == std::vector<std::string>{"x", "y"});
  CHECK_FALSE(f.exponential);
  CHECK(parse_diophantine(to_string(f)).unknowns == f.unknowns);
  CHECK(to_string(parse_diophantine(to_string(f))) == to_string(f));
}

TEST_CASE("family parse errors") {
  CHECK_THROWS_AS(parse_diophantine("unknowns: x; x - 1 = 0"), ParseError);
  CHECK_THROWS_AS(parse_diophantine("unknowns: x; x = y"), ParseError);
  CHECK_THROWS_AS(parse_diophantine("unknowns: x, x; x = 1"), ParseError);
  CHECK_THROWS_AS(parse_diophantine("unknowns: x; x = 1; x = 2"), ParseError);
  CHECK_THROWS_AS(parse_diophantine("unknowns: x"), ParseError);
  try {
    parse_diophantine("unknowns: x\nx = = 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == 2);
  }
}

TEST_CASE("variable exponents need the exponential flag") {
  CHECK_THROWS_AS(parse_diophantine("unknowns: x, y; 2^x = y"), ParseError);
  const auto f = parse_diophantine("unknowns: x, y; exponential: true; 2^x = y");
  CHECK(f.exponential);
  const auto s = search_solutions(f, {}, 16);
  CHECK(s.count == 5);  // (0,1) (1,2) (2,4) (3,8) (4,16)
}

TEST_CASE("Fermat cubic has no solutions to 50") {
  const auto f = parse_diophantine(kFermatCubicFamily);
  const auto s = search_solutions(f, {}, 50, 4);
  CHECK(s.exhausted);
  CHECK(s.count == 0);
  const auto p = count_profile(parse_diophantine(kFermatFamily), {{0}, {1}, {2}, {3}}, {10, 20, 40}, 2);
  for (const auto& row : p.rows) CHECK(row.count == 0);
  for (auto c : p.classes) CHECK(c == ProfileClass::ZeroSoFar);
}

TEST_CASE("Pythagorean triples") {
  const auto f = parse_diophantine(kPythagoreanFamily);
  const auto s = search_solutions(f, {}, 20);
  bool has345 = false;
  for (const auto& a : s.solutions) {
    CHECK(verify_witness(f, {}, a));
    CHECK(a[0] * a[0] + a[1] * a[1] == a[2] * a[2]);
    if (a == Assignment{3, 4, 5}) has345 = true;
  }
  CHECK(has345);
  // Brute-force count in plain integers.
  std::uint64_t brute = 0;
  for (std::uint64_t x = 0; x <= 20; ++x)
    for (std::uint64_t y = 0; y <= 20; ++y)
      for (std::uint64_t z = 0; z <= 20; ++z) brute += x * x + y * y == z * z;
  CHECK(s.count == brute);
  const auto p = count_profile(f, {{}}, {10, 20, 40});
  REQUIRE(p.rows.size() == 3);
  CHECK(p.rows[0].count < p.rows[1].count);
  CHECK(p.rows[1].count < p.rows[2].count);
  CHECK(p.classes[0] == ProfileClass::Growing);
}

TEST_CASE("bound 0 tests only the origin") {
  const auto f = parse_diophantine("unknowns: x, y; x + y = x*y");
  const auto s = search_solutions(f, {}, 0);
  CHECK(s.exhausted);
  CHECK(s.count == 1);
  CHECK(s.solutions[0] == Assignment{0, 0});
  const auto g = parse_diophantine("unknowns: x; x = 1");
  CHECK(search_solutions(g, {}, 0).count == 0);
}

TEST_CASE("counts are monotone in the bound") {
  const char* families[] = {
      "unknowns: x, y; x*y = 12",
      "params: a; unknowns: x, y; x^2 + a = y^2",
      "unknowns: x, y, z; x + y = z",
      kPythagoreanFamily,
  };
  for (const char* text : families) {
    const auto f = parse_diophantine(text);
    const Assignment params(f.params.size(), 3);
    std::uint64_t prev = 0;
    for (std::uint64_t b = 0; b <= 24; b += 3) {
      const auto s = search_solutions(f, params, b, 3);
      CHECK(s.count >= prev);
      CHECK(s.count == s.solutions.size());
      prev = s.count;
      for (const auto& w : s.solutions) CHECK(verify_witness(f, params, w));
    }
  }
}

TEST_CASE("jobs do not change the result") {
  const auto f = parse_diophantine(kPythagoreanFamily);
  const auto a = search_solutions(f, {}, 30, 1);
  const auto b = search_solutions(f, {}, 30, 7);
  CHECK(a.solutions == b.solutions);
}

TEST_CASE("search preconditions and guards") {
  const auto f = parse_diophantine("params: a; unknowns: x; x = a");
  CHECK_THROWS_AS(search_solutions(f, {}, 5), DomainError);
  const auto s = search_solutions(f, {7}, 10);
  CHECK(s.count == 1);
  const auto big = search_solutions(parse_diophantine(kPythagoreanFamily), {}, 1000, 1, 1000);
  CHECK_FALSE(big.exhausted);
  CHECK_FALSE(verify_witness(f, {7}, {6}));
}

TEST_CASE("exact arithmetic beyond 64 bits") {
  const auto f = parse_diophantine("unknowns: x; x^30 + 1 = 2^30 * x^30 + 1");
  CHECK(search_solutions(f, {}, 3).count == 1);  // only x = 0
  const auto g = parse_diophantine("unknowns: x; x^20 = 1099511627776 * 1099511627776");
  const auto s = search_solutions(g, {}, 20);
  REQUIRE(s.count == 1);
  CHECK(s.solutions[0] == Assignment{16});
}

TEST_CASE("profile CSV") {
  const auto f = parse_diophantine(kPythagoreanFamily);
  const auto csv = count_profile_csv(f, count_profile(f, {{}}, {5}));
  CHECK(csv.find("bound,count") != std::string::npos);
}
