#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uncomp/bits.hpp"

namespace uncomp {

inline constexpr int kRegisterCount = 8;
inline constexpr std::uint64_t kDefaultCap = 64;

enum class Opcode : std::uint8_t { Read, Write, Inc, Dec, Clr, Jz, Jmp, Halt, Coin };

std::string_view opcode_name(Opcode op);

struct Instruction {
  Opcode op = Opcode::Halt;
  std::uint8_t reg = 0;      // READ WRITE INC DEC CLR JZ COIN
  std::uint32_t target = 0;  // JZ JMP

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

// A validated 8-register counter-machine program.  Labels are cosmetic:
// equality compares instructions only.
class MachineDescription {
 public:
  // Throws DomainError if a target is out of range, a register index is
  // >= kRegisterCount, or the program has no HALT.
  explicit MachineDescription(std::vector<Instruction> instructions,
                              std::map<std::string, std::uint32_t> labels = {});

  const std::vector<Instruction>& instructions() const { return instructions_; }
  const std::map<std::string, std::uint32_t>& labels() const { return labels_; }
  std::size_t size() const { return instructions_.size(); }

  // True iff the program contains COIN.
  bool probabilistic() const { return probabilistic_; }

  friend bool operator==(const MachineDescription& a, const MachineDescription& b) {
    return a.instructions_ == b.instructions_;
  }

 private:
  std::vector<Instruction> instructions_;
  std::map<std::string, std::uint32_t> labels_;
  bool probabilistic_ = false;
};

// Assembly: one instruction per line (or separated by ';'), optional
// "name:" labels, '#' comments.  Throws ParseError with a 1-based line.
MachineDescription parse_machine(std::string_view text);

// Inverse of parse_machine up to whitespace and label naming.
std::string format_machine(const MachineDescription& d);

// Registers either grow without bound or saturate at `cap`.  Only capped
// runs look for repeated configurations.
struct RegisterMode {
  std::optional<std::uint64_t> cap;

  static RegisterMode unbounded() { return {}; }
  static RegisterMode capped(std::uint64_t k = kDefaultCap) { return {k}; }
  bool is_capped() const { return cap.has_value(); }

  friend bool operator==(const RegisterMode&, const RegisterMode&) = default;
};

enum class NotInDomainReason : std::uint8_t {
  InputExhausted,    // READ past the end of the input
  UnconsumedInput,   // HALT with unread input
  InvalidEncoding,   // universal machine only: header does not decode
};

std::string_view reason_name(NotInDomainReason r);

struct Halted {
  BitString output;
  std::uint64_t steps = 0;
  std::uint64_t consumed = 0;
  friend bool operator==(const Halted&, const Halted&) = default;
};

struct NotInDomain {
  NotInDomainReason reason = NotInDomainReason::InputExhausted;
  std::uint64_t steps = 0;     // executed before the verdict
  std::uint64_t consumed = 0;  // bits read before the verdict
  friend bool operator==(const NotInDomain&, const NotInDomain&) = default;
};

struct BudgetExceeded {
  std::uint64_t steps = 0;
  friend bool operator==(const BudgetExceeded&, const BudgetExceeded&) = default;
};

struct LoopProved {
  std::uint64_t period = 0;
  std::uint64_t steps = 0;  // step at which the repeat was observed
  friend bool operator==(const LoopProved&, const LoopProved&) = default;
};

using RunResult = std::variant<Halted, NotInDomain, BudgetExceeded, LoopProved>;

inline const Halted* as_halted(const RunResult& r) { return std::get_if<Halted>(&r); }
inline bool is_halted(const RunResult& r) { return std::holds_alternative<Halted>(r); }
std::string_view variant_name(const RunResult& r);

// Deterministic execution.  A program is in the domain iff the machine
// reaches HALT having read exactly all of `input`.  Throws DomainError if
// budget == 0 or a COIN instruction is executed.
RunResult run(const MachineDescription& d, const Program& input, std::uint64_t budget,
              RegisterMode mode = RegisterMode::unbounded());

// Elias-gamma(|body|) followed by the canonical body encoding.
Program encode_machine(const MachineDescription& d);

// Decodes a complete encoding (nothing may follow it).  Accepts COIN.
std::optional<MachineDescription> decode_machine(const Program& p);

// Length of the Elias-gamma code of n >= 1.
std::size_t elias_gamma_length(std::uint64_t n);
BitString elias_gamma(std::uint64_t n);

// The universal machine U: reads a machine encoding from the head of p
// (one step per bit) and interprets it on the remaining bits (one step per
// simulated instruction).  Encodings containing COIN are invalid for U.
RunResult universal_run(const Program& p, std::uint64_t budget,
                        RegisterMode mode = RegisterMode::unbounded());

// The first `count` inputs (quasi-lexicographic) on which d halts within
// `budget`, found by extending inputs only where d asks for more bits.
std::vector<Program> domain_inputs(const MachineDescription& d, std::size_t count,
                                   std::uint64_t budget,
                                   RegisterMode mode = RegisterMode::unbounded(),
                                   std::size_t max_length = 32);

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::map<BitString, std::uint64_t> outputs;
  std::uint64_t timeouts = 0;       // no HALT within the per-trial budget
  std::uint64_t not_in_domain = 0;  // halted with unread input or read past it

  double frequency(const BitString& output) const;
};

// Runs `trials` executions where COIN r stores a fair bit (splitmix64
// stream seeded with `seed`).  No loop detection: repeats are not proofs.
MonteCarloResult monte_carlo_run(const MachineDescription& d, const Program& input,
                                 std::uint64_t trials, std::uint64_t seed,
                                 std::uint64_t per_trial_budget = 100000,
                                 RegisterMode mode = RegisterMode::unbounded());

}  // namespace uncomp
