// Command-line front end.  Exit codes: 0 success, 1 domain or parse error
// (or a failed repro criterion), 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uncomp/delta1.hpp"
#include "uncomp/diophantine.hpp"
#include "uncomp/enumeration.hpp"
#include "uncomp/error.hpp"
#include "uncomp/integrals.hpp"
#include "uncomp/json_io.hpp"
#include "uncomp/limits.hpp"
#include "uncomp/predictor.hpp"
#include "uncomp/repro.hpp"

using namespace uncomp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

unsigned default_jobs() {
  if (const char* env = std::getenv("UNCOMP_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void flatten(const Json& j, const std::string& key, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", os);
  } else {
    os << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

// Shared flags and the machine source options.
struct Common {
  bool json = false;
};

void add_json(CLI::App* sub, Common& c) { sub->add_flag("--json", c.json, "Emit JSON"); }

void emit(const Common& c, const Json& j) {
  if (c.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    flatten(j, "", std::cout);
  }
}

struct MachineSource {
  std::string file;
  std::string text;

  void add(CLI::App* sub) {
    auto* f = sub->add_option("--file", file, "Assembly file");
    auto* a = sub->add_option("--asm", text, "Assembly text; ';' separates instructions");
    f->excludes(a);
  }
  MachineDescription load() const {
    if (!file.empty()) return parse_machine(read_file(file));
    if (!text.empty()) return parse_machine(text);
    throw CLI::RequiredError("--file or --asm");
  }
};

RegisterMode mode_from(std::uint64_t cap) {
  return cap == 0 ? RegisterMode::unbounded() : RegisterMode::capped(cap);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw DomainError("bad number '" + item + "'");
  }
  return out;
}

Assignment parse_assignment(const std::string& s) {
  Assignment out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size() || item.front() == '-') throw DomainError("bad natural '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Suite file: {"entries": [{"name", "machine", "inputs": [...]} or
// {"name", "machine", "domain_inputs": N}]}.
std::vector<SuiteEntry> load_suite(const std::string& path, std::uint64_t budget) {
  const Json j = Json::parse(read_file(path));
  std::vector<SuiteEntry> suite;
  for (const auto& e : j.at("entries")) {
    const std::string name = e.at("name").get<std::string>();
    const MachineDescription d = parse_machine(e.at("machine").get<std::string>());
    if (e.contains("inputs")) {
      for (const auto& x : e.at("inputs")) suite.push_back({name, d, BitString::parse(x.get<std::string>())});
    } else {
      const auto n = e.at("domain_inputs").get<std::size_t>();
      for (auto& x : domain_inputs(d, n, budget)) suite.push_back({name, d, std::move(x)});
    }
  }
  if (suite.empty()) throw DomainError("empty suite");
  return suite;
}

Json default_suite_json() {
  Json entries = Json::array();
  for (const auto& [name, d] : reference_machines()) {
    entries.push_back({{"name", name}, {"machine", format_machine(d)}, {"domain_inputs", 20}});
  }
  return {{"entries", entries}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for prefix-free machines, halting-probability bounds, "
               "certified Delta1 predicates, kernel integrals and Diophantine search"};
  app.require_subcommand(1);
  Common common;
  const unsigned jobs_default = default_jobs();

  // machine ---------------------------------------------------------------
  auto* machine = app.add_subcommand("machine", "Run, encode or decode counter machines");
  machine->require_subcommand(1);
  MachineSource src;
  std::string input_bits, program_bits;
  std::uint64_t budget = 100000, cap = 0, trials = 10000, seed = 1;

  auto* m_run = machine->add_subcommand("run", "Run a machine on an input");
  src.add(m_run);
  m_run->add_option("--input", input_bits, "Input bits");
  m_run->add_option("--budget", budget, "Step budget");
  m_run->add_option("--cap", cap, "Register cap (0 = unbounded)");
  add_json(m_run, common);

  auto* m_enc = machine->add_subcommand("encode", "Print the program encoding of a machine");
  src.add(m_enc);
  add_json(m_enc, common);

  auto* m_dec = machine->add_subcommand("decode", "Print the assembly for an encoding");
  m_dec->add_option("--bits", program_bits, "Encoded machine")->required();
  add_json(m_dec, common);

  auto* m_uni = machine->add_subcommand("universal", "Run the universal machine on a program");
  m_uni->add_option("--program", program_bits, "Program bits")->required();
  m_uni->add_option("--budget", budget, "Step budget");
  m_uni->add_option("--cap", cap, "Register cap (0 = unbounded)");
  add_json(m_uni, common);

  auto* m_mc = machine->add_subcommand("sample", "Monte Carlo runs of a machine with COIN");
  src.add(m_mc);
  m_mc->add_option("--input", input_bits, "Input bits");
  m_mc->add_option("--trials", trials, "Number of runs");
  m_mc->add_option("--seed", seed, "Seed");
  m_mc->add_option("--budget", budget, "Per-run step budget");
  m_mc->add_option("--cap", cap, "Register cap (0 = unbounded)");
  add_json(m_mc, common);

  // enumeration ------------------------------------------------------------
  EnumerationOptions eo;
  eo.jobs = jobs_default;
  std::uint64_t ecap = kDefaultCap;
  bool programs = false;
  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("--max-len", eo.max_len, "Longest program length");
    sub->add_option("--budget", eo.budget, "Step budget per run");
    sub->add_option("--cap", ecap, "Register cap (0 = unbounded)");
    sub->add_option("--jobs", eo.jobs, "Worker threads (default UNCOMP_JOBS or 1)");
    add_json(sub, common);
  };
  auto* enumerate = app.add_subcommand("enumerate", "Classify every program up to a length");
  add_enum(enumerate);
  enumerate->add_flag("--programs", programs, "List every classified program");
  auto* omega = app.add_subcommand("omega", "Bounds on the halting probability");
  add_enum(omega);
  auto* sigma = app.add_subcommand("sigma", "Sigma and busy-beaver time table");
  add_enum(sigma);

  // predictor --------------------------------------------------------------
  std::uint64_t pcap = kDefaultCap, pbudget = 1000000;
  auto* predict = app.add_subcommand("predict", "Minimal running time t(x) and canonical program x#");
  predict->add_option("--program", program_bits, "Program bits")->required();
  predict->add_option("--cap", pcap, "Register cap (0 = unbounded)");
  predict->add_option("--budget", pbudget, "Step budget");
  add_json(predict, common);

  std::string suite_file;
  bool dump_suite = false;
  std::uint64_t sbudget = 1000000;
  auto* slowdown = app.add_subcommand("slowdown", "Compare direct and simulated running times");
  slowdown->add_option("--suite", suite_file, "Suite JSON file (default: built-in suite)");
  slowdown->add_option("--budget", sbudget, "Step budget");
  slowdown->add_flag("--dump-suite", dump_suite, "Print the built-in suite as JSON and exit");
  add_json(slowdown, common);

  // delta1 -----------------------------------------------------------------
  std::string expr_text, box_text;
  int arity = 1, depth = 40;
  double radius = 10.0;
  std::size_t cbudget = kDefaultClassifyBudget;
  auto* expr = app.add_subcommand("expr", "Parse an expression and enclose its range");
  expr->add_option("text", expr_text, "Expression")->required();
  expr->add_option("--arity", arity, "Number of variables");
  expr->add_option("--box", box_text, "Comma-separated lo,hi pairs, one pair per variable");
  add_json(expr, common);

  auto* root = app.add_subcommand("root", "Certified root search on [-r, r]");
  root->add_option("--g", expr_text, "Expression in x1")->required();
  root->add_option("--radius", radius, "Half-width of the box");
  root->add_option("--depth", depth, "Bisection depth budget");
  add_json(root, common);

  auto* converge = app.add_subcommand("converge", "Classify the integral of 1/((x^2+1) g^2)");
  converge->add_option("--g", expr_text, "Expression in x1")->required();
  converge->add_option("--budget", cbudget, "Box budget");
  add_json(converge, common);

  // integrals ---------------------------------------------------------------
  std::string f_text;
  double x0 = 0.0, t0 = 1.0, y0 = 1.0, tol = kDefaultTol;
  bool classify = false, no_normalized = false;
  auto* heat = app.add_subcommand("heat", "Heat-kernel solution u(x0, t0)");
  heat->add_option("--f", f_text, "Boundary function")->required();
  heat->add_option("--x0", x0);
  heat->add_option("--t0", t0);
  heat->add_option("--tol", tol);
  heat->add_flag("--classify", classify, "Only classify convergence");
  heat->add_option("--budget", cbudget, "Classification box budget");
  add_json(heat, common);

  auto* electro = app.add_subcommand("electro", "Half-plane potential Phi(x0, y0)");
  electro->add_option("--f", f_text, "Boundary function")->required();
  electro->add_option("--x0", x0);
  electro->add_option("--y0", y0);
  electro->add_option("--tol", tol);
  electro->add_flag("--classify", classify, "Only classify convergence");
  electro->add_option("--budget", cbudget, "Classification box budget");
  electro->add_flag("--no-normalized", no_normalized, "Skip the substituted representation");
  add_json(electro, common);

  std::string family_file, problem = "heat";
  double s0 = 1.0;
  auto* sequence = app.add_subcommand("sequence", "Verdict sequence for a family of H_i");
  sequence->add_option("--family", family_file, "One expression per line")->required();
  sequence->add_option("--problem", problem, "heat or electro")->check(CLI::IsMember({"heat", "electro"}));
  sequence->add_option("--x0", x0);
  sequence->add_option("--s0", s0, "t0 (heat) or y0 (electro)");
  sequence->add_option("--budget", cbudget, "Box budget per instance");
  add_json(sequence, common);

  // diophantine -------------------------------------------------------------
  std::string params_text, bounds_text = "10,20,40";
  std::uint64_t bound = 10, max_points = kDefaultMaxPoints;
  unsigned djobs = jobs_default;
  auto* dioph = app.add_subcommand("dioph", "Bounded search over Diophantine families");
  dioph->require_subcommand(1);
  auto* d_search = dioph->add_subcommand("search", "Solutions in the box [0, bound]^m");
  d_search->add_option("--family", family_file, "Family file")->required();
  d_search->add_option("--params", params_text, "Comma-separated parameter values");
  d_search->add_option("--bound", bound);
  d_search->add_option("--jobs", djobs);
  d_search->add_option("--max-points", max_points);
  add_json(d_search, common);
  auto* d_profile = dioph->add_subcommand("profile", "Solution counts across parameters and bounds");
  d_profile->add_option("--family", family_file, "Family file")->required();
  d_profile->add_option("--params", params_text, "Parameter tuples separated by ';', values by ','");
  d_profile->add_option("--bounds", bounds_text, "Comma-separated bounds");
  d_profile->add_option("--jobs", djobs);
  add_json(d_profile, common);

  // limits, repro -----------------------------------------------------------
  long double n = 0, energy = 0, time = 0;
  auto* limits = app.add_subcommand("limits", "Time and energy bounds for n steps");
  limits->add_option("--n", n, "Steps")->required();
  limits->add_option("--energy", energy, "Energy in joules")->required();
  auto* time_opt = limits->add_option("--time", time, "Time in seconds");
  add_json(limits, common);

  ReproOptions ro;
  ro.jobs = std::max(2u, jobs_default);
  std::vector<int> only;
  auto* repro = app.add_subcommand("repro", "Run the acceptance suite");
  repro->add_option("--jobs", ro.jobs);
  repro->add_option("--only", only, "Criterion ids")->check(CLI::Range(1, kCriterionCount));
  add_json(repro, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (m_run->parsed()) {
      const auto d = src.load();
      emit(common, to_json(run(d, BitString::parse(input_bits), budget, mode_from(cap))));
    } else if (m_enc->parsed()) {
      const auto d = src.load();
      const Program p = encode_machine(d);
      emit(common, {{"bits", p.str()}, {"length", p.size()}, {"instructions", d.size()}});
    } else if (m_dec->parsed()) {
      const auto d = decode_machine(BitString::parse(program_bits));
      if (!d) throw DomainError("not a complete machine encoding");
      if (common.json) {
        emit(common, {{"assembly", format_machine(*d)}, {"probabilistic", d->probabilistic()}});
      } else {
        std::cout << format_machine(*d);
      }
    } else if (m_uni->parsed()) {
      emit(common, to_json(universal_run(BitString::parse(program_bits), budget, mode_from(cap))));
    } else if (m_mc->parsed()) {
      const auto d = src.load();
      emit(common, to_json(monte_carlo_run(d, BitString::parse(input_bits), trials, seed, budget, mode_from(cap))));
    } else if (enumerate->parsed() || omega->parsed() || sigma->parsed()) {
      eo.mode = mode_from(ecap);
      const EnumerationReport rep = enumerate_domain(eo);
      if (enumerate->parsed()) {
        emit(common, to_json(rep, programs));
      } else if (omega->parsed()) {
        emit(common, to_json(omega_bounds(rep)));
      } else {
        const SigmaTable table = sigma_table(rep);
        const auto c = halting_time_constant(table);
        if (common.json) {
          emit(common, to_json(table, c));
        } else {
          std::cout << sigma_table_csv(table);
          std::cout << "# halting_time_constant: " << (c ? std::to_string(*c) : "none") << '\n';
        }
      }
    } else if (predict->parsed()) {
      emit(common, to_json(min_time(BitString::parse(program_bits), mode_from(pcap), pbudget)));
    } else if (slowdown->parsed()) {
      if (dump_suite) {
        std::cout << default_suite_json().dump(2) << '\n';
        return 0;
      }
      const auto suite = suite_file.empty() ? default_suite() : load_suite(suite_file, sbudget);
      const SlowdownReport rep = slowdown_report(suite, sbudget);
      if (common.json) {
        emit(common, to_json(rep));
      } else {
        std::cout << slowdown_csv(rep);
      }
    } else if (expr->parsed()) {
      const Expr e = parse_expr(expr_text, arity);
      Json j = {{"expr", to_string(e)}, {"arity", arity}, {"nodes", node_count(e)}};
      if (!box_text.empty()) {
        const auto v = parse_list(box_text);
        if (v.size() != 2 * static_cast<std::size_t>(arity)) throw DomainError("--box needs one lo,hi pair per variable");
        std::vector<Interval> box;
        for (std::size_t i = 0; i < v.size(); i += 2) box.emplace_back(v[i], v[i + 1]);
        j["box"] = Json::array();
        for (const auto& b : box) j["box"].push_back(to_json(b));
        j["enclosure"] = to_json(eval_interval(e, box));
      }
      emit(common, j);
    } else if (root->parsed()) {
      emit(common, to_json(find_root(parse_expr(expr_text), radius, depth)));
    } else if (converge->parsed()) {
      emit(common, to_json(integral_convergence(parse_expr(expr_text), cbudget)));
    } else if (heat->parsed() || electro->parsed()) {
      const BoundaryFunction f = parse_boundary(f_text);
      Json j;
      if (heat->parsed()) {
        j = classify ? to_json(heat_classify(f, x0, t0, cbudget)) : to_json(heat_eval(f, x0, t0, tol));
      } else {
        j = classify ? to_json(electro_classify(f, x0, y0, cbudget)) : to_json(electro_eval(f, x0, y0, tol, !no_normalized));
      }
      j["f"] = to_string(f);
      emit(common, j);
    } else if (sequence->parsed()) {
      const auto family = parse_family(read_file(family_file));
      const Problem p{problem == "heat" ? Problem::Kind::Heat : Problem::Kind::Electro, x0, s0};
      const auto seq = verdict_sequence(family, p, cbudget);
      if (common.json) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < seq.size(); ++i) {
          rows.push_back({{"i", i}, {"h", to_string(family[i])}, {"verdict", std::string(1, symbol_char(seq[i]))}});
        }
        emit(common, {{"problem", problem}, {"x0", x0}, {"s0", s0}, {"sequence", rows}});
      } else {
        std::cout << "i,verdict\n";
        for (std::size_t i = 0; i < seq.size(); ++i) std::cout << i << ',' << symbol_char(seq[i]) << '\n';
      }
    } else if (d_search->parsed()) {
      const auto f = parse_diophantine(read_file(family_file));
      emit(common, to_json(search_solutions(f, parse_assignment(params_text), bound, djobs, max_points)));
    } else if (d_profile->parsed()) {
      const auto f = parse_diophantine(read_file(family_file));
      std::vector<Assignment> values;
      std::stringstream ss(params_text);
      std::string tuple;
      while (std::getline(ss, tuple, ';')) values.push_back(parse_assignment(tuple));
      if (values.empty()) values.push_back({});
      std::vector<std::uint64_t> bounds;
      for (auto b : parse_assignment(bounds_text)) bounds.push_back(b);
      const CountProfile p = count_profile(f, values, bounds, djobs);
      if (common.json) {
        emit(common, to_json(f, p));
      } else {
        std::cout << count_profile_csv(f, p);
      }
    } else if (limits->parsed()) {
      emit(common, to_json(*time_opt ? limits_report(n, energy, time) : limits_report(n, energy)));
    } else if (repro->parsed()) {
      std::vector<CriterionResult> results;
      if (only.empty()) {
        results = run_acceptance(ro);
      } else {
        for (int id : only) results.push_back(run_criterion(id, ro));
      }
      bool all = true;
      Json j = Json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        if (common.json) {
          j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        } else {
          std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
                    << r.seconds << " s)\n";
        }
      }
      if (common.json) std::cout << Json{{"criteria", j}, {"all_pass", all}}.dump(2) << '\n';
      return all ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
