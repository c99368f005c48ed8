#include <doctest.h>

#include <cmath>

#include "uncomp/json_io.hpp"

using namespace uncomp;

TEST_CASE("non-finite numbers become strings") {
  CHECK(number(INFINITY) == "inf");
  CHECK(number(-INFINITY) == "-inf");
  CHECK(number(NAN) == "nan");
  CHECK(number(1.5) == 1.5);
  CHECK(to_json(Interval::entire()).dump() == R"(["-inf","inf"])");
}

TEST_CASE("run results have a fixed key set") {
  const auto echo = parse_machine("READ r0; WRITE r0; HALT");
  const Json h = to_json(run(echo, BitString::parse("1"), 10));
  CHECK(h.dump() == R"({"variant":"Halted","output":"1","steps":3,"consumed":1,"reason":null,"period":null})");
  const Json n = to_json(run(echo, BitString(), 10));
  CHECK(n["variant"] == "NotInDomain");
  CHECK(n["reason"] == "input-exhausted");
  CHECK(n["output"].is_null());
}

TEST_CASE("verdicts carry certificates") {
  const Json d = to_json(integral_convergence(parse_expr("x1")));
  CHECK(d["verdict"] == "Divergent");
  CHECK(d["certificate"]["kind"] == "pole");
  const Json h = to_json(heat_eval(parse_boundary("gauss_sq"), 0.0, 2.0));
  CHECK(h["outcome"] == "Divergent");
  CHECK(h["certificate"]["a"] == 0.75);
  CHECK(h["certificate"]["paper_bound"] == true);
}

TEST_CASE("limits report records h") {
  const Json j = to_json(limits_report(1, 1));
  CHECK(j["h"] == 6.62607015e-34);
  CHECK(j["time"].is_null());
}
