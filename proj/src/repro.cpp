#include "uncomp/repro.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "uncomp/diophantine.hpp"
#include "uncomp/enumeration.hpp"
#include "uncomp/error.hpp"
#include "uncomp/integrals.hpp"
#include "uncomp/limits.hpp"
#include "uncomp/predictor.hpp"
#include "uncomp/reference.hpp"

namespace uncomp {

const char* const kFermatCubicFamily =
    "unknowns: p, q, r\n"
    "(p+1)^3 + (q+1)^3 = (r+1)^3\n";

const char* const kFermatFamily =
    "params: s\n"
    "unknowns: p, q, r\n"
    "exponential: true\n"
    "(p+1)^(s+3) + (q+1)^(s+3) = (r+1)^(s+3)\n";

const char* const kPythagoreanFamily =
    "unknowns: x, y, z\n"
    "x^2 + y^2 = z^2\n";

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  // Records the first few failures; later ones only flip the flag.
  void fail(const std::string& what) {
    if (ok || failures < 5) detail << (detail.tellp() > 0 ? "; " : "") << what;
    ok = false;
    ++failures;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  int failures = 0;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// 1 ------------------------------------------------------------------------

void prefix_free_kraft(Check& c) {
  constexpr unsigned kLen = 14;
  const auto start = std::chrono::steady_clock::now();
  EnumerationOptions o;
  o.max_len = kLen;
  o.budget = 100000;
  o.mode = RegisterMode::capped(64);
  const EnumerationReport rep = enumerate_domain(o);
  const double enum_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::string> halted;
  for (const auto& cl : rep.classified) {
    if (is_halted(cl.result)) halted.push_back(cl.program.str());
  }

  // Oracle: every string, no pruning or inheritance.
  const auto oracle = reference::all_runs(kLen, o.budget, o.mode);
  std::vector<std::string> oracle_halted;
  std::map<std::string, Halted> oracle_results;
  for (const auto& cl : oracle) {
    if (const auto* h = as_halted(cl.result)) {
      oracle_halted.push_back(cl.program.str());
      oracle_results.emplace(cl.program.str(), *h);
    }
  }
  std::sort(halted.begin(), halted.end());
  std::sort(oracle_halted.begin(), oracle_halted.end());
  c.expect(halted == oracle_halted, "halted set differs from the exhaustive oracle");
  for (const auto& cl : rep.classified) {
    if (const auto* h = as_halted(cl.result)) {
      auto it = oracle_results.find(cl.program.str());
      if (it != oracle_results.end() && !(it->second == *h)) c.fail("result differs for " + cl.program.str());
    }
  }

  // In lexicographic order a prefix sorts immediately before some string
  // it prefixes, so adjacent pairs suffice.
  std::size_t violations = 0;
  for (std::size_t i = 1; i < oracle_halted.size(); ++i) {
    const std::string& a = oracle_halted[i - 1];
    if (oracle_halted[i].compare(0, a.size(), a) == 0) ++violations;
  }
  c.expect(violations == 0, std::to_string(violations) + " prefix violations");

  // Kraft sum scaled by 2^kLen, exact.
  std::uint64_t scaled = 0;
  for (const auto& p : oracle_halted) scaled += std::uint64_t{1} << (kLen - p.size());
  c.expect(scaled <= (std::uint64_t{1} << kLen), "Kraft sum exceeds 1");
  c.expect(Dyadic(scaled, kLen) == rep.omega_lower, "omega_lower differs from the Kraft sum");
  c.expect(rep.unresolved.empty(), "unresolved programs remain");
  c.expect(enum_seconds < 60.0, "enumeration took " + fmt(enum_seconds) + " s");
  if (c.ok) {
    c.detail << oracle_halted.size() << " halting programs, 0 prefix violations, Kraft sum "
             << Dyadic(scaled, kLen).to_string() << " = " << Dyadic(scaled, kLen).to_double()
             << ", enumeration " << enum_seconds << " s";
  }
}

// 2 ------------------------------------------------------------------------

void universality(Check& c) {
  constexpr std::uint64_t kBudget = 1000000;
  std::size_t machines = 0, domain_cases = 0, outside_cases = 0;
  for (const auto& [name, d] : reference_machines()) {
    ++machines;
    const Program code = encode_machine(d);
    const auto inputs = domain_inputs(d, 20, kBudget);
    if (inputs.size() < 20) c.fail(name + ": fewer than 20 domain inputs");
    for (const Program& x : inputs) {
      ++domain_cases;
      const RunResult direct = run(d, x, kBudget);
      const RunResult viaU = universal_run(code + x, kBudget);
      const auto* hd = as_halted(direct);
      const auto* hu = as_halted(viaU);
      if (!hd || !hu) {
        c.fail(name + " on '" + x.str() + "': not halted");
        continue;
      }
      c.expect(hd->output == hu->output, name + " on '" + x.str() + "': outputs differ");
      c.expect(hu->consumed == hd->consumed + code.size(),
               name + " on '" + x.str() + "': consumed overhead is not |encode(d)|");
      c.expect((code + x).size() == x.size() + code.size(), "length is not additive");
    }
    // Outside the domain: one-bit extensions and truncations of domain inputs.
    std::set<Program> outside;
    for (const Program& x : inputs) {
      outside.insert(x + BitString::parse("0"));
      outside.insert(x + BitString::parse("1"));
      if (!x.empty()) outside.insert(x.prefix(x.size() - 1));
    }
    for (const Program& x : outside) {
      const RegisterMode mode = RegisterMode::capped(64);
      const RunResult direct = run(d, x, kBudget, mode);
      const RunResult viaU = universal_run(code + x, kBudget, mode);
      if (is_halted(direct) != is_halted(viaU)) {
        c.fail(name + " on '" + x.str() + "': domain membership differs");
      }
      if (!is_halted(direct)) ++outside_cases;
    }
  }
  c.expect(machines >= 5, "fewer than 5 machines");
  if (c.ok) {
    c.detail << machines << " machines, " << domain_cases << " domain inputs agree with overhead |encode(d)|, "
             << outside_cases << " non-domain inputs agree on membership";
  }
}

// 3 ------------------------------------------------------------------------

void slowdown(Check& c) {
  const SlowdownReport rep = slowdown_report(default_suite());
  c.expect(rep.rows.size() >= 100, "fewer than 100 rows");
  std::size_t slower = 0;
  for (const auto& row : rep.rows) {
    if (row.t_u > row.t_c) ++slower;
  }
  c.expect(slower == rep.rows.size() && rep.all_slower, "some rows are not slower under U");
  c.expect(rep.min_ratio > 1.0, "min ratio not above 1");
  c.expect(rep.min_ratio == kGoldenMinSlowdownRatio,
           "min ratio " + fmt(rep.min_ratio) + " differs from golden " + fmt(kGoldenMinSlowdownRatio));
  if (c.ok) {
    c.detail << slower << "/" << rep.rows.size() << " rows with T_U(x') > T_C(x), min ratio "
             << fmt(rep.min_ratio) << " (golden), median " << rep.median_ratio << ", max " << rep.max_ratio;
  }
}

// 4 ------------------------------------------------------------------------

// Domain programs with T_U <= 20, spread over the enumeration order.
std::vector<Program> predictor_sample() {
  EnumerationOptions o;
  o.max_len = 18;
  const EnumerationReport rep = enumerate_domain(o);
  std::vector<Program> pool;
  for (const auto& cl : rep.classified) {
    if (const auto* h = as_halted(cl.result); h && h->steps <= 20) pool.push_back(cl.program);
  }
  std::vector<Program> out;
  constexpr std::size_t kWant = 12;
  for (std::size_t i = 0; i < kWant && !pool.empty(); ++i) {
    out.push_back(pool[i * (pool.size() - 1) / (kWant - 1)]);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void predictor_exactness(Check& c) {
  const auto sample = predictor_sample();
  c.expect(sample.size() >= 10, "fewer than 10 sample programs");
  std::size_t improved = 0;
  for (const Program& x : sample) {
    const PredictorResult fast = min_time(x);
    const reference::Prediction slow = reference::brute_force_min_time(x);
    const std::string tag = "x=" + x.str();
    c.expect(fast.t_of_x == slow.t, tag + ": t differs from oracle");
    c.expect(fast.canonical == slow.canonical, tag + ": x# differs from oracle");
    const RunResult rx = universal_run(x, 1000000);
    const RunResult rsharp = universal_run(fast.canonical, 1000000);
    const auto* ux = as_halted(rx);
    const auto* usharp = as_halted(rsharp);
    if (!ux || !usharp) {
      c.fail(tag + ": x or x# does not halt");
      continue;
    }
    c.expect(ux->output == usharp->output, tag + ": U(x#) != U(x)");
    c.expect(usharp->steps == fast.t_of_x, tag + ": T_U(x#) != t(x)");
    c.expect(canonical_program(fast.canonical) == fast.canonical, tag + ": x# is not a fixed point");
    if (fast.canonical != x) ++improved;
  }
  if (c.ok) {
    c.detail << sample.size() << " programs match the brute-force oracle (" << improved
             << " with x# != x)";
  }
}

// 5 ------------------------------------------------------------------------

void sigma_consistency(Check& c, unsigned jobs) {
  constexpr unsigned kLen = 20;
  EnumerationOptions o;
  o.max_len = kLen;
  o.mode = RegisterMode::capped(64);
  o.jobs = 1;
  const EnumerationReport first = enumerate_domain(o);
  const EnumerationReport again = enumerate_domain(o);
  o.jobs = std::max(2u, jobs);
  const EnumerationReport parallel = enumerate_domain(o);

  const SigmaTable table = sigma_table(first);
  const std::string csv = sigma_table_csv(table);
  c.expect(csv == sigma_table_csv(sigma_table(again)), "table differs on rerun");
  c.expect(csv == sigma_table_csv(sigma_table(parallel)), "table differs with " + std::to_string(o.jobs) + " workers");
  c.expect(first.exact(), "enumeration is not exact");
  for (const auto& row : table) c.expect(row.exact, "row " + std::to_string(row.n) + " not exact");

  const auto constant = halting_time_constant(table);
  if (!constant) {
    c.fail("no halting-time constant found");
    return;
  }
  const unsigned k = *constant;
  std::size_t checked = 0;
  for (const auto& cl : first.classified) {
    const auto* h = as_halted(cl.result);
    if (!h) continue;
    for (unsigned n = static_cast<unsigned>(cl.program.size()); n + k <= kLen; ++n) {
      const auto& s = table[n + k].sigma_hat;
      if (!s || BigNat(h->steps) > *s) {
        c.fail("program " + cl.program.str() + " exceeds sigma_hat(" + std::to_string(n + k) + ")");
        break;
      }
      ++checked;
    }
  }
  c.expect(checked > 0, "no (program, n) pair in range");
  if (c.ok) {
    c.detail << "c = " << k << ", " << checked << " (program, n) pairs within sigma_hat(n + c); "
             << "CSV identical across rerun and " << o.jobs << " workers; sigma_hat(" << kLen
             << ") = " << table[kLen].sigma_hat->str();
  }
}

// 6 ------------------------------------------------------------------------

void heat_kernel(Check& c) {
  const BoundaryFunction one = parse_boundary("one");
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double x0 = -3.0 + 0.7 * i;
    const double t0 = 0.05 + 0.6 * i;
    const EvalOutcome o = heat_eval(one, x0, t0, 1e-6);
    const auto* v = std::get_if<Value>(&o);
    if (!v) {
      c.fail("one at (" + fmt(x0) + ", " + fmt(t0) + ") gave " + outcome_name(o));
      continue;
    }
    worst = std::max(worst, std::fabs(v->estimate - 1.0));
  }
  c.expect(worst <= 1e-6, "f = one off by " + fmt(worst));

  const double oracle = reference::heat_cauchy_at_origin(1.0);
  const EvalOutcome oc = heat_eval(parse_boundary("cauchy"), 0.0, 1.0, 1e-6);
  double cauchy = NAN;
  if (const auto* v = std::get_if<Value>(&oc)) {
    cauchy = v->estimate;
    c.expect(std::fabs(cauchy - oracle) <= 1e-5, "cauchy " + fmt(cauchy) + " vs oracle " + fmt(oracle));
    c.expect(std::fabs(cauchy - 0.545640) <= 1e-5, "cauchy " + fmt(cauchy) + " vs 0.545640");
  } else {
    c.fail(std::string("cauchy gave ") + outcome_name(oc));
  }

  const EvalOutcome og = heat_eval(parse_boundary("gauss_sq"), 0.0, 2.0, 1e-6);
  const auto* dv = std::get_if<Divergent>(&og);
  const auto* ec = dv ? std::get_if<ExponentCertificate>(&dv->certificate) : nullptr;
  if (!ec) {
    c.fail(std::string("gauss_sq at t0 = 2 gave ") + outcome_name(og) + " without an exponent certificate");
  } else {
    c.expect(ec->paper_bound && ec->a == 0.75 && ec->b == 0.0 && ec->c == 0.0,
             "exponent certificate is not (3/4) y^2");
  }
  if (c.ok) {
    c.detail << "one: max |u - 1| = " << worst << " over 10 points; cauchy(0,1) = " << fmt(cauchy)
             << " (oracle " << fmt(oracle) << "); gauss_sq(0,2) Divergent, exponent 0.75 y^2 from y = "
             << ec->ray_start;
  }
}

// 7 ------------------------------------------------------------------------

void poisson_kernel(Check& c) {
  struct Case {
    const char* f;
    double x0, y0;
  };
  const Case finite[] = {
      {"one", 0.0, 1.0},           {"one", 2.5, 0.3},           {"one", -1.0, -2.0},
      {"cauchy", 0.0, 1.0},        {"cauchy", 2.0, 0.5},        {"cauchy", -3.0, 4.0},
      {"recip2:exp(x1) + 1", 0.0, 1.0}, {"recip2:x1*x1 + 1", 1.0, 2.0},
      {"combo:2*one+-1*cauchy", 0.5, 1.5}, {"sin(x1)", 1.0, 1.0},
  };
  double worst_gap = 0.0;
  for (const Case& k : finite) {
    const EvalOutcome o = electro_eval(parse_boundary(k.f), k.x0, k.y0, 1e-6, true);
    const auto* v = std::get_if<Value>(&o);
    const std::string tag = std::string(k.f) + " at (" + fmt(k.x0) + ", " + fmt(k.y0) + ")";
    if (!v || !v->normalized_estimate) {
      c.fail(tag + " gave " + outcome_name(o));
      continue;
    }
    const double gap = std::fabs(v->estimate - *v->normalized_estimate);
    worst_gap = std::max(worst_gap, gap);
    c.expect(gap <= 2e-6, tag + ": representations differ by " + fmt(gap));
    if (std::string(k.f) == "one") {
      const double expect = k.y0 > 0 ? 1.0 : -1.0;
      c.expect(std::fabs(v->estimate - expect) <= 1e-6, tag + ": " + fmt(v->estimate));
    }
    if (std::string(k.f) == "cauchy") {
      const double oracle = reference::electro_cauchy(k.x0, k.y0);
      c.expect(std::fabs(v->estimate - oracle) <= 1e-6, tag + ": " + fmt(v->estimate) + " vs " + fmt(oracle));
    }
  }
  const EvalOutcome pole = electro_eval(parse_boundary("recip2:x1"), 0.0, 1.0);
  c.expect(std::holds_alternative<Divergent>(pole), std::string("recip2:x1 gave ") + outcome_name(pole));
  if (c.ok) {
    c.detail << std::size(finite) << " finite cases, max gap between representations " << worst_gap
             << "; one -> 1 and cauchy(0,1) -> 0.5 within 1e-6; t^-2 Divergent";
  }
}

// 8 ------------------------------------------------------------------------

std::vector<Expr> verdict_suite() {
  const char* handmade[] = {
      "sin(x1)",          "exp(x1)",           "sin(x1)*sin(x1)",   "x1",
      "x1 + -1000",       "exp(x1) + 1",       "x1*x1 + 1",         "sin(pi*x1)",
      "x1 + 1/2",         "exp(x1) + -2",      "sin(x1) + 2",       "x1*x1*x1 + -2",
      "sin(exp(x1))",     "exp(sin(x1))",      "x1*x1 + -2",        "sin(x1) + 1/2",
      "exp(-1*x1) + x1",  "sin(x1) + x1",      "exp(x1*x1)",        "x1*exp(x1) + 1",
  };
  std::vector<Expr> out;
  for (const char* s : handmade) out.push_back(parse_expr(s));
  std::mt19937_64 rng(20240617);
  while (out.size() < 80) {
    Expr e = reference::random_expr(rng, 3);
    if (max_var(e) == 1) out.push_back(std::move(e));
  }
  return out;
}

void delta1_soundness(Check& c) {
  const auto suite = verdict_suite();
  constexpr double kRadius = 4.0;
  constexpr int kDepth = 40;
  std::size_t has_root = 0, no_root = 0, divergent = 0, finite = 0, unknown = 0;
  for (const Expr& g : suite) {
    const std::string tag = to_string(g);
    const RootVerdict rv = find_root(g, kRadius, kDepth);
    if (const auto* h = std::get_if<HasRoot>(&rv)) {
      ++has_root;
      c.expect(reference::verify_has_root(g, *h), "false HasRoot for " + tag);
    } else if (const auto* n = std::get_if<NoRootInBox>(&rv)) {
      ++no_root;
      c.expect(reference::verify_no_root(g, *n, kDepth), "false NoRootInBox for " + tag);
    } else {
      ++unknown;
    }

    const ConvergenceVerdict cv = integral_convergence(g, 5000);
    if (const auto* d = std::get_if<Divergent>(&cv)) {
      ++divergent;
      const auto* p = std::get_if<PoleCertificate>(&d->certificate);
      c.expect(p && reference::verify_pole(g, *p), "false Divergent for " + tag);
    } else if (const auto* f = std::get_if<Finite>(&cv)) {
      ++finite;
      // |g| >= delta everywhere, sampled through x = tan(theta).
      bool ok = f->delta > 0 && f->upper_bound <= M_PI / (f->delta * f->delta) * (1 + 1e-12);
      for (int i = 1; ok && i < 2000; ++i) {
        const reference::HighPrecision theta =
            (reference::HighPrecision(i) / 2000 - reference::HighPrecision(0.5)) *
            boost::math::constants::pi<reference::HighPrecision>();
        const auto v = reference::eval_high_precision(g, tan(theta));
        if (abs(v) < reference::HighPrecision(f->delta)) ok = false;
      }
      c.expect(ok, "false Finite for " + tag);
    } else {
      ++unknown;
    }
  }
  c.expect(suite.size() >= 50, "suite has fewer than 50 expressions");
  c.expect(has_root > 0 && no_root > 0 && divergent > 0, "suite does not exercise every verdict");

  // Containment fuzz.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> centre(-5.0, 5.0), log_width(-6.0, 0.0), unit(0.0, 1.0);
  std::size_t fuzz = 0;
  for (int i = 0; i < 1000; ++i) {
    const Expr e = reference::random_expr(rng, 4);
    const double m = centre(rng);
    const double w = std::pow(10.0, log_width(rng));
    const Interval box(m - w / 2, m + w / 2);
    const Interval iv = eval_interval(e, box);
    for (int k = 0; k < 4; ++k) {
      const double x = k == 0 ? box.lo() : k == 1 ? box.hi() : std::clamp(box.lo() + w * unit(rng), box.lo(), box.hi());
      ++fuzz;
      if (!reference::encloses(iv, reference::eval_high_precision(e, x))) {
        c.fail("containment fails for " + to_string(e) + " at " + fmt(x));
      }
    }
  }
  if (c.ok) {
    c.detail << suite.size() << " expressions: " << has_root << " HasRoot, " << no_root << " NoRootInBox, "
             << divergent << " Divergent, " << finite << " Finite, " << unknown
             << " Unknown; 0 false verdicts; " << fuzz << " containment checks on 1000 random cases";
  }
}

// 9 ------------------------------------------------------------------------

void diophantine(Check& c, unsigned jobs) {
  std::size_t verified = 0;
  const DiophantineFamily fermat = parse_diophantine(kFermatCubicFamily);
  const SearchOutcome f50 = search_solutions(fermat, {}, 50, jobs);
  c.expect(f50.exhausted && f50.count == 0, "Fermat cubic has " + std::to_string(f50.count) + " solutions to 50");

  const DiophantineFamily fermat_s = parse_diophantine(kFermatFamily);
  const CountProfile fp = count_profile(fermat_s, {{0}, {1}, {2}, {3}}, {10, 20, 40}, jobs);
  for (const auto& row : fp.rows) c.expect(row.count == 0, "Fermat family has solutions");

  const DiophantineFamily pyth = parse_diophantine(kPythagoreanFamily);
  std::vector<std::uint64_t> counts;
  for (std::uint64_t b : {10, 20, 40}) {
    const SearchOutcome s = search_solutions(pyth, {}, b, jobs);
    c.expect(s.exhausted, "Pythagorean box not exhausted");
    counts.push_back(s.count);
    for (const auto& w : s.solutions) {
      ++verified;
      c.expect(verify_witness(pyth, {}, w), "witness does not verify");
    }
  }
  c.expect(counts[0] < counts[1] && counts[1] < counts[2], "Pythagorean counts not strictly increasing");
  if (c.ok) {
    c.detail << "Fermat cubic: 0 solutions to 50; exponent s+3, s in 0..3: all zero; Pythagorean counts "
             << counts[0] << " < " << counts[1] << " < " << counts[2] << "; " << verified
             << " witnesses re-verified";
  }
}

// 10 -----------------------------------------------------------------------

void limits(Check& c) {
  constexpr double kHbar = 1.0545718176461565e-34;
  const double hbar = static_cast<double>(min_time(1.0L, 1.0L));
  c.expect(hbar == kHbar || std::nextafter(hbar, 0.0) == kHbar || std::nextafter(hbar, 1.0) == kHbar,
           "hbar = " + fmt(hbar));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_n(0.0, 15.0), log_e(-30.0, 30.0);
  std::size_t trips = 0;
  for (int i = 0; i < 2000; ++i) {
    const double n = std::floor(std::pow(10.0, log_n(rng)));
    const long double e = std::pow(10.0L, static_cast<long double>(log_e(rng)));
    const double back = static_cast<double>(max_steps(min_time(n, e), e));
    ++trips;
    if (!(back == n || std::nextafter(back, 0.0) == n || std::nextafter(back, HUGE_VAL) == n)) {
      c.fail("round trip " + fmt(n) + " -> " + fmt(back));
    }
    const double n2 = n + 1;
    c.expect(min_time(n2, e) > min_time(n, e), "min_time not increasing in n at " + fmt(n));
    c.expect(min_time(n, e * 2) < min_time(n, e), "min_time not decreasing in E at " + fmt(n));
  }
  const long double m = min_energy(1e30L, 4.35e17L);
  c.expect(std::fabs(static_cast<double>(m) / 2.4e8 - 1.0) < 0.05, "min_energy(1e30, 4.35e17) = " + fmt(m));
  if (c.ok) {
    c.detail << "hbar = " << fmt(hbar) << "; " << trips << " round trips within 1 ulp; monotone; "
             << "min_energy(1e30 steps, 4.35e17 s) = " << static_cast<double>(m) << " J";
  }
}

const char* const kNames[kCriterionCount] = {
    "prefix-freeness and Kraft sum",
    "universality",
    "slowdown under U",
    "predictor exactness",
    "sigma/BB consistency",
    "heat kernel",
    "Poisson kernel",
    "Delta1 verdict soundness",
    "Diophantine families",
    "physical limits",
};

}  // namespace

CriterionResult run_criterion(int id, const ReproOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id out of range");
  CriterionResult r;
  r.id = id;
  r.name = kNames[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    switch (id) {
      case 1: prefix_free_kraft(c); break;
      case 2: universality(c); break;
      case 3: slowdown(c); break;
      case 4: predictor_exactness(c); break;
      case 5: sigma_consistency(c, opts.jobs); break;
      case 6: heat_kernel(c); break;
      case 7: poisson_kernel(c); break;
      case 8: delta1_soundness(c); break;
      case 9: diophantine(c, opts.jobs); break;
      case 10: limits(c); break;
    }
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = c.ok;
  r.detail = c.detail.str();
  return r;
}

std::vector<CriterionResult> run_acceptance(const ReproOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace uncomp
