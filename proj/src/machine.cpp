#include "uncomp/machine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "uncomp/error.hpp"

namespace uncomp {

namespace {

struct OpInfo {
  Opcode op;
  std::string_view name;
  bool has_reg;
  bool has_target;
};

constexpr OpInfo kOps[] = {
    {Opcode::Read, "READ", true, false}, {Opcode::Write, "WRITE", true, false},
    {Opcode::Inc, "INC", true, false},   {Opcode::Dec, "DEC", true, false},
    {Opcode::Clr, "CLR", true, false},   {Opcode::Jz, "JZ", true, true},
    {Opcode::Jmp, "JMP", false, true},   {Opcode::Halt, "HALT", false, false},
    {Opcode::Coin, "COIN", true, false},
};

const OpInfo& info(Opcode op) {
  for (const auto& i : kOps) {
    if (i.op == op) return i;
  }
  throw std::logic_error("unknown opcode");
}

// Opcode prefix code.  Complete (Kraft sum 1), HALT is one bit so the
// single-HALT machine encodes as "10".
struct OpCode {
  Opcode op;
  std::string_view bits;
};
constexpr OpCode kOpCodes[] = {
    {Opcode::Halt, "0"},      {Opcode::Write, "10"},     {Opcode::Inc, "1100"},
    {Opcode::Read, "1101"},   {Opcode::Dec, "11100"},    {Opcode::Jz, "11101"},
    {Opcode::Jmp, "11110"},   {Opcode::Clr, "111110"},   {Opcode::Coin, "111111"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string_view> split_operands(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string u(s);
  for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return u;
}

struct PendingTarget {
  std::size_t instruction;
  std::string label;
  std::size_t line;
};

// Machine configuration; the output tape does not influence the future.
struct Config {
  std::uint32_t pc = 0;
  std::array<std::uint64_t, kRegisterCount> regs{};
  std::uint64_t pos = 0;
  friend bool operator==(const Config&, const Config&) = default;
};

struct NoCoin {
  bool operator()() const { throw DomainError("COIN executed in a deterministic run"); }
};

template <class CoinSource>
RunResult execute(const std::vector<Instruction>& prog, std::string_view input,
                  std::uint64_t budget, RegisterMode mode, bool detect_loops,
                  CoinSource&& coin) {
  Config c;
  BitString out;
  std::uint64_t steps = 0;

  const bool capped = mode.is_capped();
  const std::uint64_t cap = mode.cap.value_or(0);
  detect_loops = detect_loops && capped;

  // Brent cycle detection on configurations.
  Config saved = c;
  std::uint64_t power = 1;
  std::uint64_t lam = 0;

  while (true) {
    if (steps >= budget) return BudgetExceeded{budget};
    const Instruction& ins = prog[c.pc];
    auto& r = c.regs[ins.reg];
    switch (ins.op) {
      case Opcode::Read:
        if (c.pos == input.size()) {
          return NotInDomain{NotInDomainReason::InputExhausted, steps, c.pos};
        }
        r = input[c.pos++] == '1' ? 1 : 0;
        ++c.pc;
        break;
      case Opcode::Write:
        out.push_back(r != 0);
        ++c.pc;
        break;
      case Opcode::Inc:
        if (!capped || r < cap) ++r;
        ++c.pc;
        break;
      case Opcode::Dec:
        if (r > 0) --r;
        ++c.pc;
        break;
      case Opcode::Clr:
        r = 0;
        ++c.pc;
        break;
      case Opcode::Jz:
        c.pc = (r == 0) ? ins.target : c.pc + 1;
        break;
      case Opcode::Jmp:
        c.pc = ins.target;
        break;
      case Opcode::Coin:
        r = coin() ? 1 : 0;
        ++c.pc;
        break;
      case Opcode::Halt:
        ++steps;
        if (c.pos != input.size()) {
          return NotInDomain{NotInDomainReason::UnconsumedInput, steps, c.pos};
        }
        return Halted{std::move(out), steps, c.pos};
    }
    ++steps;
    if (detect_loops) {
      ++lam;
      if (c == saved) return LoopProved{lam, steps};
      if (lam == power) {
        saved = c;
        power *= 2;
        lam = 0;
      }
    }
  }
}

class BitReader {
 public:
  explicit BitReader(std::string_view bits) : bits_(bits) {}
  std::optional<bool> next() {
    if (pos_ >= bits_.size()) return std::nullopt;
    return bits_[pos_++] == '1';
  }
  std::optional<std::uint64_t> gamma() {
    int zeros = 0;
    while (true) {
      auto b = next();
      if (!b) return std::nullopt;
      if (*b) break;
      if (++zeros > 62) return std::nullopt;
    }
    std::uint64_t v = 1;
    for (int i = 0; i < zeros; ++i) {
      auto b = next();
      if (!b) return std::nullopt;
      v = (v << 1) | (*b ? 1u : 0u);
    }
    return v;
  }
  bool done() const { return pos_ == bits_.size(); }

 private:
  std::string_view bits_;
  std::size_t pos_ = 0;
};

std::optional<MachineDescription> decode_body(std::string_view body, bool allow_coin) {
  BitReader in(body);
  std::vector<Instruction> prog;
  while (!in.done()) {
    std::string code;
    const OpCode* match = nullptr;
    while (!match) {
      auto b = in.next();
      if (!b) return std::nullopt;
      code.push_back(*b ? '1' : '0');
      for (const auto& oc : kOpCodes) {
        if (oc.bits == code) match = &oc;
      }
    }
    if (match->op == Opcode::Coin && !allow_coin) return std::nullopt;
    Instruction ins{match->op, 0, 0};
    const auto& oi = info(match->op);
    if (oi.has_reg) {
      auto v = in.gamma();
      if (!v || *v > kRegisterCount) return std::nullopt;
      ins.reg = static_cast<std::uint8_t>(*v - 1);
    }
    if (oi.has_target) {
      auto v = in.gamma();
      if (!v || *v > (1u << 30)) return std::nullopt;
      ins.target = static_cast<std::uint32_t>(*v - 1);
    }
    prog.push_back(ins);
  }
  try {
    return MachineDescription(std::move(prog));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view opcode_name(Opcode op) { return info(op).name; }

std::string_view reason_name(NotInDomainReason r) {
  switch (r) {
    case NotInDomainReason::InputExhausted:
      return "input-exhausted";
    case NotInDomainReason::UnconsumedInput:
      return "unconsumed-input";
    case NotInDomainReason::InvalidEncoding:
      return "invalid-encoding";
  }
  return "?";
}

std::string_view variant_name(const RunResult& r) {
  static constexpr std::string_view names[] = {"Halted", "NotInDomain", "BudgetExceeded",
                                               "LoopProved"};
  return names[r.index()];
}

MachineDescription::MachineDescription(std::vector<Instruction> instructions,
                                       std::map<std::string, std::uint32_t> labels)
    : instructions_(std::move(instructions)), labels_(std::move(labels)) {
  if (instructions_.empty()) throw DomainError("machine has no instructions");
  bool has_halt = false;
  for (const auto& ins : instructions_) {
    const auto& oi = info(ins.op);
    if (oi.has_reg && ins.reg >= kRegisterCount) throw DomainError("register out of range");
    if (oi.has_target && ins.target >= instructions_.size()) {
      throw DomainError("jump target out of range");
    }
    has_halt = has_halt || ins.op == Opcode::Halt;
    probabilistic_ = probabilistic_ || ins.op == Opcode::Coin;
  }
  if (!has_halt) throw DomainError("machine has no HALT");
  // Control must never run past the last instruction.
  const Opcode last = instructions_.back().op;
  if (last != Opcode::Halt && last != Opcode::Jmp) {
    throw DomainError("last instruction must be HALT or JMP");
  }
  for (const auto& [name, idx] : labels_) {
    if (idx >= instructions_.size()) throw DomainError("label '" + name + "' out of range");
  }
}

MachineDescription parse_machine(std::string_view text) {
  std::vector<Instruction> prog;
  std::map<std::string, std::uint32_t> labels;
  std::vector<PendingTarget> pending;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t piece_start = 0;
    while (piece_start <= line.size()) {
      std::size_t piece_end = line.find(';', piece_start);
      if (piece_end == std::string_view::npos) piece_end = line.size();
      std::string_view stmt = trim(line.substr(piece_start, piece_end - piece_start));
      piece_start = piece_end + 1;

      while (true) {
        auto colon = stmt.find(':');
        if (colon == std::string_view::npos) break;
        std::string_view name = trim(stmt.substr(0, colon));
        if (!is_identifier(name)) throw ParseError("syntax error: bad label", line_no);
        if (!labels.emplace(std::string(name), static_cast<std::uint32_t>(prog.size())).second) {
          throw ParseError("duplicate label '" + std::string(name) + "'", line_no);
        }
        stmt = trim(stmt.substr(colon + 1));
      }
      if (stmt.empty()) continue;

      auto words = split_operands(stmt);
      const std::string mnemonic = upper(words[0]);
      const OpInfo* oi = nullptr;
      for (const auto& i : kOps) {
        if (i.name == mnemonic) oi = &i;
      }
      if (!oi) throw ParseError("unknown opcode '" + std::string(words[0]) + "'", line_no);
      const std::size_t want = 1 + (oi->has_reg ? 1 : 0) + (oi->has_target ? 1 : 0);
      if (words.size() != want) {
        throw ParseError("syntax error: " + mnemonic + " expects " +
                             std::to_string(want - 1) + " operand(s)",
                         line_no);
      }
      Instruction ins{oi->op, 0, 0};
      std::size_t w = 1;
      if (oi->has_reg) {
        std::string_view reg = words[w++];
        if (reg.size() < 2 || (reg[0] != 'r' && reg[0] != 'R')) {
          throw ParseError("syntax error: expected register, got '" + std::string(reg) + "'",
                           line_no);
        }
        unsigned idx = 0;
        auto [p, ec] = std::from_chars(reg.data() + 1, reg.data() + reg.size(), idx);
        if (ec != std::errc() || p != reg.data() + reg.size()) {
          throw ParseError("syntax error: bad register '" + std::string(reg) + "'", line_no);
        }
        if (idx >= kRegisterCount) {
          throw ParseError("register out of range: '" + std::string(reg) + "'", line_no);
        }
        ins.reg = static_cast<std::uint8_t>(idx);
      }
      if (oi->has_target) {
        std::string_view t = words[w++];
        if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) {
          unsigned idx = 0;
          auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), idx);
          if (ec != std::errc() || p != t.data() + t.size()) {
            throw ParseError("syntax error: bad target '" + std::string(t) + "'", line_no);
          }
          ins.target = idx;
          pending.push_back({prog.size(), "", line_no});
        } else if (is_identifier(t)) {
          pending.push_back({prog.size(), std::string(t), line_no});
        } else {
          throw ParseError("syntax error: bad target '" + std::string(t) + "'", line_no);
        }
      }
      prog.push_back(ins);
    }
    if (end == text.size()) break;
  }

  for (const auto& p : pending) {
    if (p.label.empty()) {
      if (prog[p.instruction].target >= prog.size()) {
        throw ParseError("unresolved label: index " +
                             std::to_string(prog[p.instruction].target) + " out of range",
                         p.line);
      }
      continue;
    }
    auto it = labels.find(p.label);
    if (it == labels.end() || it->second >= prog.size()) {
      throw ParseError("unresolved label '" + p.label + "'", p.line);
    }
    prog[p.instruction].target = it->second;
  }
  if (prog.empty()) throw ParseError("syntax error: empty program", line_no);
  try {
    return MachineDescription(std::move(prog), std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no);
  }
}

std::string format_machine(const MachineDescription& d) {
  std::map<std::uint32_t, std::string> names;
  for (const auto& [name, idx] : d.labels()) names.emplace(idx, name);
  for (const auto& ins : d.instructions()) {
    if (info(ins.op).has_target && !names.count(ins.target)) {
      names.emplace(ins.target, "L" + std::to_string(ins.target));
    }
  }
  std::ostringstream os;
  for (std::uint32_t i = 0; i < d.size(); ++i) {
    if (auto it = names.find(i); it != names.end()) os << it->second << ":\n";
    const auto& ins = d.instructions()[i];
    const auto& oi = info(ins.op);
    os << "  " << oi.name;
    if (oi.has_reg) os << " r" << int(ins.reg);
    if (oi.has_target) os << ' ' << names.at(ins.target);
    os << '\n';
  }
  return os.str();
}

RunResult run(const MachineDescription& d, const Program& input, std::uint64_t budget,
              RegisterMode mode) {
  if (budget == 0) throw DomainError("budget must be at least 1");
  return execute(d.instructions(), input.view(), budget, mode, true, NoCoin{});
}

std::size_t elias_gamma_length(std::uint64_t n) {
  int top = 63;
  while (top > 0 && ((n >> top) & 1u) == 0) --top;
  return 2 * static_cast<std::size_t>(top) + 1;
}

BitString elias_gamma(std::uint64_t n) {
  if (n == 0) throw DomainError("Elias gamma is defined for n >= 1");
  const std::size_t len = elias_gamma_length(n);
  const std::size_t bits = (len + 1) / 2;
  return BitString::from_value(0, len - bits) + BitString::from_value(n, bits);
}

Program encode_machine(const MachineDescription& d) {
  std::string body;
  for (const auto& ins : d.instructions()) {
    for (const auto& oc : kOpCodes) {
      if (oc.op == ins.op) body += oc.bits;
    }
    const auto& oi = info(ins.op);
    if (oi.has_reg) body += elias_gamma(ins.reg + 1u).str();
    if (oi.has_target) body += elias_gamma(ins.target + 1u).str();
  }
  return elias_gamma(body.size()) + BitString::parse(body);
}

std::optional<MachineDescription> decode_machine(const Program& p) {
  BitReader in(p.view());
  auto n = in.gamma();
  if (!n) return std::nullopt;
  const std::size_t header = elias_gamma_length(*n);
  if (p.size() - header != *n) return std::nullopt;
  return decode_body(p.view().substr(header), true);
}

RunResult universal_run(const Program& p, std::uint64_t budget, RegisterMode mode) {
  if (budget == 0) throw DomainError("budget must be at least 1");
  const std::string_view bits = p.view();
  std::uint64_t steps = 0;
  std::size_t pos = 0;

  // Header: one step per bit, read on demand.
  int zeros = 0;
  std::uint64_t body_len = 1;
  auto read_bit = [&]() -> std::optional<RunResult> {
    if (steps >= budget) return BudgetExceeded{budget};
    if (pos == bits.size()) {
      return NotInDomain{NotInDomainReason::InputExhausted, steps, pos};
    }
    ++steps;
    ++pos;
    return std::nullopt;
  };
  while (true) {
    if (auto stop = read_bit()) return *stop;
    if (bits[pos - 1] == '1') break;
    if (++zeros > 62) return NotInDomain{NotInDomainReason::InvalidEncoding, steps, pos};
  }
  for (int i = 0; i < zeros; ++i) {
    if (auto stop = read_bit()) return *stop;
    body_len = (body_len << 1) | (bits[pos - 1] == '1' ? 1u : 0u);
  }

  // Body: same per-bit cost, computed in bulk.
  const std::uint64_t available = bits.size() - pos;
  const std::uint64_t budget_left = budget - steps;
  const std::uint64_t k = std::min({body_len, available, budget_left});
  if (k < body_len) {
    if (k == budget_left) return BudgetExceeded{budget};
    return NotInDomain{NotInDomainReason::InputExhausted, steps + available, bits.size()};
  }
  const std::string_view body = bits.substr(pos, body_len);
  steps += body_len;
  pos += body_len;

  auto machine = decode_body(body, false);
  if (!machine) return NotInDomain{NotInDomainReason::InvalidEncoding, steps, pos};
  if (steps >= budget) return BudgetExceeded{budget};

  RunResult inner = execute(machine->instructions(), bits.substr(pos), budget - steps, mode,
                            true, NoCoin{});
  const std::uint64_t decode_steps = steps;
  const std::uint64_t header_bits = pos;
  return std::visit(
      [&](auto&& r) -> RunResult {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Halted>) {
          return Halted{std::move(r.output), r.steps + decode_steps, r.consumed + header_bits};
        } else if constexpr (std::is_same_v<T, NotInDomain>) {
          return NotInDomain{r.reason, r.steps + decode_steps, r.consumed + header_bits};
        } else if constexpr (std::is_same_v<T, BudgetExceeded>) {
          return BudgetExceeded{budget};
        } else {
          return LoopProved{r.period, r.steps + decode_steps};
        }
      },
      inner);
}

std::vector<Program> domain_inputs(const MachineDescription& d, std::size_t count,
                                   std::uint64_t budget, RegisterMode mode,
                                   std::size_t max_length) {
  std::vector<Program> found;
  std::deque<Program> queue{Program{}};
  while (!queue.empty() && found.size() < count) {
    Program p = std::move(queue.front());
    queue.pop_front();
    RunResult r = run(d, p, budget, mode);
    if (is_halted(r)) {
      found.push_back(std::move(p));
    } else if (auto* nid = std::get_if<NotInDomain>(&r);
               nid && nid->reason == NotInDomainReason::InputExhausted && p.size() < max_length) {
      Program zero = p, one = p;
      zero.push_back(false);
      one.push_back(true);
      queue.push_back(std::move(zero));
      queue.push_back(std::move(one));
    }
  }
  return found;
}

double MonteCarloResult::frequency(const BitString& output) const {
  auto it = outputs.find(output);
  if (it == outputs.end() || trials == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(trials);
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

MonteCarloResult monte_carlo_run(const MachineDescription& d, const Program& input,
                                 std::uint64_t trials, std::uint64_t seed,
                                 std::uint64_t per_trial_budget, RegisterMode mode) {
  if (trials == 0) throw DomainError("trials must be at least 1");
  if (per_trial_budget == 0) throw DomainError("budget must be at least 1");
  SplitMix64 rng{seed};
  auto coin = [&rng] { return (rng.next() >> 63) != 0; };
  MonteCarloResult out;
  out.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RunResult r = execute(d.instructions(), input.view(), per_trial_budget, mode, false, coin);
    if (auto* h = as_halted(r)) {
      ++out.outputs[h->output];
    } else if (std::holds_alternative<NotInDomain>(r)) {
      ++out.not_in_domain;
    } else {
      ++out.timeouts;
    }
  }
  return out;
}

}  // namespace uncomp
