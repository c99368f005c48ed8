#include <doctest.h>

#include "generators.hpp"
#include "uncomp/bits.hpp"

using namespace uncomp;

TEST_CASE("quasi-lexicographic order puts shorter strings first") {
  CHECK(BitString::parse("1") < BitString::parse("00"));
  CHECK(BitString::parse("01") < BitString::parse("10"));
  CHECK(BitString() < BitString::parse("0"));
}

TEST_CASE("from_index enumerates in quasi-lexicographic order") {
  CHECK(BitString::from_index(0).str() == "");
  CHECK(BitString::from_index(1).str() == "0");
  CHECK(BitString::from_index(2).str() == "1");
  CHECK(BitString::from_index(3).str() == "00");
  CHECK(BitString::from_index(6).str() == "11");
  for (std::uint64_t m = 0; m < 2000; ++m) {
    CHECK(quasi_lex_index(BitString::from_index(m)) == m);
    CHECK(BitString::from_index(m) < BitString::from_index(m + 1));
  }
}

TEST_CASE("parse rejects characters other than 0 and 1") {
  CHECK_THROWS_AS(BitString::parse("012"), std::invalid_argument);
}

TEST_CASE("prefix relation") {
  gen::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const BitString a = gen::bits(rng, 10);
    const BitString b = gen::bits(rng, 10);
    CHECK((a + b).prefix(a.size()) == a);
    CHECK(a.is_prefix_of(a + b));
    CHECK((a + b).suffix(a.size()) == b);
  }
  CHECK_FALSE(BitString::parse("10").is_prefix_of(BitString::parse("1")));
}

TEST_CASE("from_value pads to the requested length") {
  CHECK(BitString::from_value(5, 5).str() == "00101");
  CHECK(BitString::from_value(0, 0).str() == "");
}
