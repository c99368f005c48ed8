#include "uncomp/predictor.hpp"

#include <algorithm>
#include <sstream>

#include "uncomp/error.hpp"

namespace uncomp {

PredictorResult min_time(const Program& x, RegisterMode mode, std::uint64_t budget) {
  const RunResult first = universal_run(x, budget, mode);
  const auto* h = as_halted(first);
  if (!h) throw DomainError("program is not in the domain of U within the budget");

  PredictorResult res;
  res.target_output = h->output;
  res.t_of_x = h->steps;
  res.canonical = x;

  std::vector<Program> stack{Program{}};
  while (!stack.empty()) {
    Program p = std::move(stack.back());
    stack.pop_back();
    const RunResult r = universal_run(p, res.t_of_x, mode);
    ++res.certificate.runs;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Halted>) {
            if (v.output != res.target_output) {
              ++res.certificate.witnesses_other_output;
            } else if (v.steps < res.t_of_x) {
              res.t_of_x = v.steps;
              res.canonical = p;
              res.witnesses = 1;
            } else {
              // v.steps == t_of_x: the run was bounded by it.
              if (p < res.canonical) res.canonical = p;
              ++res.witnesses;
            }
          } else if constexpr (std::is_same_v<T, NotInDomain>) {
            if (v.reason != NotInDomainReason::InputExhausted) {
              ++res.certificate.not_in_domain;
            } else if (v.steps + 1 <= res.t_of_x) {
              Program one = p;
              one.push_back(true);
              p.push_back(false);
              stack.push_back(std::move(one));
              stack.push_back(std::move(p));
            } else {
              ++res.certificate.too_slow;
            }
          } else if constexpr (std::is_same_v<T, BudgetExceeded>) {
            ++res.certificate.too_slow;
          } else {
            ++res.certificate.loops;
          }
        },
        r);
  }
  return res;
}

Program canonical_program(const Program& x, RegisterMode mode, std::uint64_t budget) {
  return min_time(x, mode, budget).canonical;
}

SlowdownReport slowdown_report(const std::vector<SuiteEntry>& suite, std::uint64_t budget,
                               RegisterMode mode) {
  SlowdownReport rep;
  std::vector<double> ratios;
  for (const auto& e : suite) {
    const RunResult direct = run(e.machine, e.input, budget, mode);
    const auto* hc = as_halted(direct);
    if (!hc) {
      throw DomainError("suite entry '" + e.name + "' on input '" + e.input.str() +
                        "' does not halt");
    }
    const Program xp = encode_machine(e.machine) + e.input;
    const RunResult sim = universal_run(xp, budget, mode);
    const auto* hu = as_halted(sim);
    if (!hu || hu->output != hc->output) {
      throw DomainError("universal simulation of '" + e.name + "' disagrees with direct run");
    }
    SlowdownRow row{e.name, e.input, hc->steps, xp.size(), hu->steps,
                    static_cast<double>(hu->steps) / static_cast<double>(hc->steps)};
    ratios.push_back(row.ratio);
    rep.rows.push_back(std::move(row));
  }
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    rep.min_ratio = ratios.front();
    rep.max_ratio = ratios.back();
    const std::size_t m = ratios.size() / 2;
    rep.median_ratio = ratios.size() % 2 ? ratios[m] : 0.5 * (ratios[m - 1] + ratios[m]);
  }
  rep.all_slower = std::all_of(rep.rows.begin(), rep.rows.end(),
                               [](const SlowdownRow& r) { return r.t_u > r.t_c; });
  return rep;
}

std::string slowdown_csv(const SlowdownReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "machine,input,t_c,encoded_len,t_u,ratio\n";
  for (const auto& r : report.rows) {
    os << r.name << ',' << r.input.str() << ',' << r.t_c << ',' << r.encoded_len << ','
       << r.t_u << ',' << r.ratio << '\n';
  }
  return os.str();
}

std::vector<std::pair<std::string, MachineDescription>> reference_machines() {
  return {
      {"unary-echo", parse_machine(R"(
loop: READ r0
      WRITE r0
      JZ r0 loop
      HALT
)")},
      {"fixed5", parse_machine(R"(
READ r0; WRITE r0
READ r0; WRITE r0
READ r0; WRITE r0
READ r0; WRITE r0
READ r0; WRITE r0
HALT
)")},
      {"pair-decoder", parse_machine(R"(
loop: READ r0
      JZ r0 done
      READ r1
      WRITE r1
      JMP loop
done: HALT
)")},
      {"unary-doubler", parse_machine(R"(
read: READ r0
      JZ r0 zero
      JMP emit
zero: INC r1
      INC r1
      JMP read
emit: JZ r1 done
      DEC r1
      INC r2
      WRITE r2
      JMP emit
done: HALT
)")},
      {"pair-parity", parse_machine(R"(
loop: READ r0
      JZ r0 done
      READ r1
      JZ r1 loop
      JZ r2 set
      CLR r2
      JMP loop
set:  INC r2
      JMP loop
done: WRITE r2
      HALT
)")},
  };
}

std::vector<SuiteEntry> default_suite() {
  std::vector<SuiteEntry> suite;
  for (auto& [name, m] : reference_machines()) {
    for (auto& x : domain_inputs(m, 20, 100000)) suite.push_back({name, m, std::move(x)});
  }
  return suite;
}

}  // namespace uncomp
