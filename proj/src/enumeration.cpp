#include "uncomp/enumeration.hpp"

#include <sstream>

#include "uncomp/error.hpp"
#include "uncomp/parallel.hpp"

namespace uncomp {

Dyadic::Dyadic(std::uint64_t numerator, unsigned exponent) : num_(numerator), exp_(exponent) {
  if (exp_ > 63) throw DomainError("dyadic exponent too large");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1u) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

double Dyadic::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(std::uint64_t{1} << exp_);
}

std::string Dyadic::to_string() const {
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  return (a.num_ << (e - a.exp_)) <=> (b.num_ << (e - b.exp_));
}

namespace {

bool asks_for_more(const RunResult& r) {
  auto* nid = std::get_if<NotInDomain>(&r);
  return nid && nid->reason == NotInDomainReason::InputExhausted;
}

}  // namespace

EnumerationReport enumerate_domain(const EnumerationOptions& opts) {
  if (opts.max_len > kMaxEnumerationLength) {
    throw DomainError("max_len exceeds " + std::to_string(kMaxEnumerationLength));
  }
  if (opts.budget == 0) throw DomainError("budget must be at least 1");

  EnumerationReport rep;
  rep.max_len = opts.max_len;
  rep.budget = opts.budget;
  rep.mode = opts.mode;

  const unsigned top = opts.max_len;
  std::uint64_t halted_units = 0;      // in units of 2^-max_len
  std::uint64_t unresolved_units = 0;

  // nullopt marks strings excluded by a Halted prefix.
  std::vector<std::optional<RunResult>> level{universal_run(Program{}, opts.budget, opts.mode)};
  rep.executed = 1;
  std::vector<char> inherited{0};

  for (unsigned len = 0;; ++len) {
    const std::uint64_t weight = std::uint64_t{1} << (top - len);
    for (std::size_t v = 0; v < level.size(); ++v) {
      if (!level[v]) {
        ++rep.excluded;
        continue;
      }
      Program p = BitString::from_value(v, len);
      if (std::holds_alternative<BudgetExceeded>(*level[v])) {
        if (!inherited[v]) unresolved_units += weight;
        rep.unresolved.push_back(std::move(p));
        continue;
      }
      if (is_halted(*level[v])) halted_units += weight;
      rep.classified.push_back({std::move(p), *level[v]});
    }
    if (len == top) break;

    std::vector<std::optional<RunResult>> next(level.size() * 2);
    std::vector<char> next_inherited(next.size(), 0);
    std::vector<std::size_t> to_run;
    for (std::size_t v = 0; v < next.size(); ++v) {
      const auto& parent = level[v >> 1];
      if (!parent || is_halted(*parent)) continue;
      if (asks_for_more(*parent)) {
        to_run.push_back(v);
      } else {
        next[v] = *parent;
        next_inherited[v] = 1;
      }
    }
    parallel_for(to_run.size(), opts.jobs, [&](std::size_t i) {
      const std::size_t v = to_run[i];
      next[v] = universal_run(BitString::from_value(v, len + 1), opts.budget, opts.mode);
    });
    rep.executed += to_run.size();
    level = std::move(next);
    inherited = std::move(next_inherited);
  }

  rep.omega_lower = Dyadic(halted_units, top);
  rep.unresolved_mass = Dyadic(unresolved_units, top);
  return rep;
}

OmegaBounds omega_bounds(const EnumerationReport& report) {
  return {report.omega_lower, report.omega_lower + report.unresolved_mass,
          report.mode.is_capped()};
}

std::optional<std::size_t> h_upper(const BitString& x, const EnumerationReport& report) {
  for (const auto& c : report.classified) {
    if (auto* h = as_halted(c.result); h && h->output == x) return c.program.size();
  }
  return std::nullopt;
}

SigmaEstimate sigma_hat(unsigned n, const EnumerationReport& report) {
  if (n > report.max_len) throw DomainError("n exceeds the enumerated length");
  SigmaEstimate est;
  est.exact = report.exact();
  for (const auto& c : report.classified) {
    if (c.program.size() > n) break;
    if (auto* h = as_halted(c.result)) {
      BigNat idx = quasi_lex_index(h->output);
      if (!est.value || idx > *est.value) est.value = std::move(idx);
    }
  }
  return est;
}

std::optional<std::uint64_t> bb_time(unsigned n, const EnumerationReport& report) {
  std::optional<std::uint64_t> best;
  for (const auto& c : report.classified) {
    if (c.program.size() > n) break;
    if (auto* h = as_halted(c.result)) best = std::max(best.value_or(0), h->steps);
  }
  return best;
}

SigmaTable sigma_table(const EnumerationReport& report) {
  SigmaTable table;
  std::optional<BigNat> sigma;
  std::optional<std::uint64_t> bb;
  std::size_t i = 0;
  for (unsigned n = 0; n <= report.max_len; ++n) {
    for (; i < report.classified.size() && report.classified[i].program.size() <= n; ++i) {
      if (auto* h = as_halted(report.classified[i].result)) {
        BigNat idx = quasi_lex_index(h->output);
        if (!sigma || idx > *sigma) sigma = std::move(idx);
        bb = std::max(bb.value_or(0), h->steps);
      }
    }
    table.push_back({n, sigma, report.exact(), bb});
  }
  return table;
}

std::optional<unsigned> halting_time_constant(const SigmaTable& table) {
  for (unsigned c = 0; c < table.size(); ++c) {
    bool any = false;
    bool ok = true;
    for (const auto& row : table) {
      if (!row.exact || !row.bb_time || row.n + c >= table.size()) continue;
      const auto& target = table[row.n + c];
      if (!target.exact) continue;
      any = true;
      if (!target.sigma_hat || BigNat(*row.bb_time) > *target.sigma_hat) {
        ok = false;
        break;
      }
    }
    if (!any) return std::nullopt;
    if (ok) return c;
  }
  return std::nullopt;
}

std::string sigma_table_csv(const SigmaTable& table) {
  std::ostringstream os;
  os << "n,sigma_hat,exact,bb_time\n";
  for (const auto& r : table) {
    os << r.n << ',';
    if (r.sigma_hat) os << *r.sigma_hat;
    os << ',' << (r.exact ? "true" : "false") << ',';
    if (r.bb_time) os << *r.bb_time;
    os << '\n';
  }
  return os.str();
}

}  // namespace uncomp
