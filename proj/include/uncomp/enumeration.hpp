#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uncomp/bits.hpp"
#include "uncomp/machine.hpp"

namespace uncomp {

// numerator / 2^exponent, kept in lowest terms.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::uint64_t numerator, unsigned exponent);

  std::uint64_t numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  double to_double() const;
  std::string to_string() const;  // "num/2^exp"

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();
  std::uint64_t num_ = 0;
  unsigned exp_ = 0;
};

inline constexpr unsigned kMaxEnumerationLength = 24;

struct EnumerationOptions {
  unsigned max_len = 12;
  std::uint64_t budget = 100000;
  RegisterMode mode = RegisterMode::capped();
  unsigned jobs = 1;
};

struct Classified {
  Program program;
  RunResult result;
};

struct EnumerationReport {
  unsigned max_len = 0;
  std::uint64_t budget = 0;
  RegisterMode mode = RegisterMode::capped();
  std::vector<Classified> classified;   // length-then-lex order
  std::vector<Program> unresolved;      // BudgetExceeded
  std::uint64_t excluded = 0;           // strings extending a Halted program
  Dyadic omega_lower;
  Dyadic unresolved_mass;               // over unresolved strings with no unresolved prefix
  std::uint64_t executed = 0;           // runs actually performed

  bool exact() const { return mode.is_capped() && unresolved.empty(); }
};

// Classifies every string of length <= max_len under universal_run, in
// length-then-lexicographic order.  Extensions of Halted programs are
// excluded.  Extensions of a program whose run ended without asking for
// more input share its result and are recorded without re-running.
// Throws DomainError if max_len > kMaxEnumerationLength or budget == 0.
EnumerationReport enumerate_domain(const EnumerationOptions& opts);

struct OmegaBounds {
  Dyadic lower;
  Dyadic upper;
  // Bounds concern Omega restricted to programs of length <= max_len.
  bool valid_at_scale = false;
};

OmegaBounds omega_bounds(const EnumerationReport& report);

// Length of the shortest Halted program with output x.
std::optional<std::size_t> h_upper(const BitString& x, const EnumerationReport& report);

struct SigmaEstimate {
  std::optional<BigNat> value;
  bool exact = false;
};

// Largest quasi-lexicographic index of an output of a Halted program of
// length <= n.  Throws DomainError if n > report.max_len.
SigmaEstimate sigma_hat(unsigned n, const EnumerationReport& report);

// Largest step count of a Halted program of length <= n.
std::optional<std::uint64_t> bb_time(unsigned n, const EnumerationReport& report);

struct SigmaRow {
  unsigned n = 0;
  std::optional<BigNat> sigma_hat;
  bool exact = false;
  std::optional<std::uint64_t> bb_time;
  friend bool operator==(const SigmaRow&, const SigmaRow&) = default;
};

using SigmaTable = std::vector<SigmaRow>;

SigmaTable sigma_table(const EnumerationReport& report);

// Smallest c such that bb_time(n) <= sigma_hat(n + c) for every n with
// bb_time(n) defined and n + c <= max_len, provided at least one such n
// exists.  Only exact rows are used; nullopt when no c qualifies.
std::optional<unsigned> halting_time_constant(const SigmaTable& table);

std::string sigma_table_csv(const SigmaTable& table);

}  // namespace uncomp
