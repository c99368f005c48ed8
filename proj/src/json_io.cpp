#include "uncomp/json_io.hpp"

#include <cmath>

namespace uncomp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json unknown_json(const Unknown& u) {
  return {{"verdict", "Unknown"}, {"reason", u.reason}, {"work", u.work}};
}

Json finite_json(const Finite& f) {
  return {{"verdict", "Finite"},
          {"upper_bound", number(f.upper_bound)},
          {"delta", number(f.delta)},
          {"boxes", f.boxes}};
}

Json opt_big(const std::optional<BigNat>& v) { return v ? Json(v->str()) : Json(nullptr); }

}  // namespace

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json to_json(const Interval& iv) { return Json::array({number(iv.lo()), number(iv.hi())}); }

Json to_json(const RunResult& r) {
  Json j = {{"variant", std::string(variant_name(r))},
            {"output", nullptr},
            {"steps", nullptr},
            {"consumed", nullptr},
            {"reason", nullptr},
            {"period", nullptr}};
  std::visit(overloaded{
                 [&](const Halted& h) {
                   j["output"] = h.output.str();
                   j["steps"] = h.steps;
                   j["consumed"] = h.consumed;
                 },
                 [&](const NotInDomain& n) {
                   j["steps"] = n.steps;
                   j["consumed"] = n.consumed;
                   j["reason"] = std::string(reason_name(n.reason));
                 },
                 [&](const BudgetExceeded& b) { j["steps"] = b.steps; },
                 [&](const LoopProved& l) {
                   j["steps"] = l.steps;
                   j["period"] = l.period;
                 },
             },
             r);
  return j;
}

Json to_json(const MonteCarloResult& m) {
  Json outs = Json::object();
  for (const auto& [out, n] : m.outputs) {
    outs[out.str()] = {{"count", n}, {"frequency", m.frequency(out)}};
  }
  return {{"trials", m.trials},
          {"outputs", outs},
          {"timeouts", m.timeouts},
          {"not_in_domain", m.not_in_domain}};
}

Json to_json(const Dyadic& d) {
  return {{"numerator", d.numerator()},
          {"exponent", d.exponent()},
          {"text", d.to_string()},
          {"value", d.to_double()}};
}

Json to_json(const EnumerationReport& r, bool include_programs) {
  std::uint64_t halted = 0, nid = 0, loops = 0;
  for (const auto& c : r.classified) {
    if (is_halted(c.result)) {
      ++halted;
    } else if (std::holds_alternative<NotInDomain>(c.result)) {
      ++nid;
    } else if (std::holds_alternative<LoopProved>(c.result)) {
      ++loops;
    }
  }
  Json j = {{"max_len", r.max_len},
            {"budget", r.budget},
            {"cap", r.mode.cap ? Json(*r.mode.cap) : Json(nullptr)},
            {"halted", halted},
            {"not_in_domain", nid},
            {"loop_proved", loops},
            {"budget_exceeded", r.unresolved.size()},
            {"excluded", r.excluded},
            {"executed", r.executed},
            {"omega_lower", to_json(r.omega_lower)},
            {"unresolved_mass", to_json(r.unresolved_mass)},
            {"exact", r.exact()}};
  if (include_programs) {
    Json progs = Json::array();
    for (const auto& c : r.classified) {
      Json e = to_json(c.result);
      e["program"] = c.program.str();
      progs.push_back(std::move(e));
    }
    j["programs"] = std::move(progs);
  }
  return j;
}

Json to_json(const OmegaBounds& b) {
  return {{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"valid_at_scale", b.valid_at_scale}};
}

Json to_json(const SigmaTable& t, std::optional<unsigned> c) {
  Json rows = Json::array();
  for (const auto& r : t) {
    rows.push_back({{"n", r.n},
                    {"sigma_hat", opt_big(r.sigma_hat)},
                    {"exact", r.exact},
                    {"bb_time", r.bb_time ? Json(*r.bb_time) : Json(nullptr)}});
  }
  return {{"rows", rows}, {"halting_time_constant", c ? Json(*c) : Json(nullptr)}};
}

Json to_json(const PredictorResult& p) {
  return {{"output", p.target_output.str()},
          {"t", p.t_of_x},
          {"canonical", p.canonical.str()},
          {"witnesses", p.witnesses},
          {"certificate",
           {{"runs", p.certificate.runs},
            {"witnesses_other_output", p.certificate.witnesses_other_output},
            {"not_in_domain", p.certificate.not_in_domain},
            {"too_slow", p.certificate.too_slow},
            {"loops", p.certificate.loops}}}};
}

Json to_json(const SlowdownReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"machine", row.name},
                    {"input", row.input.str()},
                    {"t_c", row.t_c},
                    {"encoded_len", row.encoded_len},
                    {"t_u", row.t_u},
                    {"ratio", row.ratio}});
  }
  return {{"rows", rows},
          {"min_ratio", r.min_ratio},
          {"median_ratio", r.median_ratio},
          {"max_ratio", r.max_ratio},
          {"all_slower", r.all_slower}};
}

Json to_json(const DivergenceCertificate& c) {
  return std::visit(overloaded{
                        [](const PoleCertificate& p) -> Json {
                          return {{"kind", "pole"},
                                  {"root_bracket", to_json(p.root_bracket)},
                                  {"neighbourhood", to_json(p.neighbourhood)},
                                  {"lipschitz", number(p.lipschitz)},
                                  {"weight_min", number(p.weight_min)}};
                        },
                        [](const ExponentCertificate& e) -> Json {
                          return {{"kind", "exponent"},
                                  {"a", e.a},
                                  {"b", e.b},
                                  {"c", e.c},
                                  {"ray_start", e.ray_start},
                                  {"direction", e.direction},
                                  {"paper_bound", e.paper_bound}};
                        },
                        [](const RayCertificate& r) -> Json {
                          return {{"kind", "ray"},
                                  {"ray_start", r.ray_start},
                                  {"direction", r.direction},
                                  {"integrand_min", number(r.integrand_min)}};
                        },
                    },
                    c);
}

Json to_json(const RootVerdict& v) {
  return std::visit(overloaded{
                        [](const HasRoot& h) -> Json {
                          return {{"verdict", "HasRoot"},
                                  {"bracket", to_json(h.bracket)},
                                  {"sign_at_lo", h.sign_at_lo},
                                  {"boxes", h.boxes}};
                        },
                        [](const NoRootInBox& n) -> Json {
                          return {{"verdict", "NoRootInBox"},
                                  {"box", to_json(n.box)},
                                  {"delta", number(n.delta)},
                                  {"boxes", n.boxes}};
                        },
                        [](const Unknown& u) { return unknown_json(u); },
                    },
                    v);
}

Json to_json(const ConvergenceVerdict& v) {
  return std::visit(overloaded{
                        [](const Finite& f) { return finite_json(f); },
                        [](const Divergent& d) -> Json {
                          return {{"verdict", "Divergent"}, {"certificate", to_json(d.certificate)}};
                        },
                        [](const Unknown& u) { return unknown_json(u); },
                    },
                    v);
}

Json to_json(const EvalOutcome& o) {
  return std::visit(overloaded{
                        [](const Value& v) -> Json {
                          Json j = {{"outcome", "Value"},
                                    {"estimate", number(v.estimate)},
                                    {"error_bound", number(v.error_bound)},
                                    {"panels", v.panels}};
                          if (v.normalized_estimate) j["normalized_estimate"] = number(*v.normalized_estimate);
                          return j;
                        },
                        [](const Divergent& d) -> Json {
                          return {{"outcome", "Divergent"}, {"certificate", to_json(d.certificate)}};
                        },
                        [](const Unknown& u) -> Json {
                          return {{"outcome", "Unknown"}, {"reason", u.reason}, {"work", u.work}};
                        },
                    },
                    o);
}

Json to_json(const SearchOutcome& s) {
  Json sols = Json::array();
  for (const auto& a : s.solutions) sols.push_back(a);
  return {{"bound", s.bound}, {"count", s.count}, {"exhausted", s.exhausted}, {"solutions", sols}};
}

Json to_json(const DiophantineFamily& f, const CountProfile& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows) rows.push_back({{"params", r.params}, {"bound", r.bound}, {"count", r.count}});
  Json classes = Json::array();
  for (std::size_t i = 0; i < p.param_values.size(); ++i) {
    classes.push_back({{"params", p.param_values[i]}, {"class", profile_class_name(p.classes[i])}});
  }
  return {{"param_names", f.params}, {"rows", rows}, {"classes", classes}};
}

Json to_json(const LimitsReport& r) {
  Json j = {{"h", static_cast<double>(r.h)},
            {"n", static_cast<double>(r.n)},
            {"energy", static_cast<double>(r.energy)},
            {"min_time", static_cast<double>(r.min_time)},
            {"time", nullptr},
            {"max_steps", nullptr},
            {"min_energy", nullptr},
            {"feasible", nullptr}};
  if (r.has_time) {
    j["time"] = static_cast<double>(r.time);
    j["max_steps"] = number(static_cast<double>(r.max_steps));
    j["min_energy"] = number(static_cast<double>(r.min_energy));
    j["feasible"] = r.feasible;
  }
  return j;
}

}  // namespace uncomp
