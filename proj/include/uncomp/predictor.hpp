#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uncomp/bits.hpp"
#include "uncomp/machine.hpp"

namespace uncomp {

// How the candidate programs were disposed of during the search.  Every
// program shorter than t(x) falls into exactly one bucket, possibly via a
// prefix whose run already settled all of its extensions.
struct SearchCertificate {
  std::uint64_t runs = 0;
  std::uint64_t witnesses_other_output = 0;  // halted, different output
  std::uint64_t not_in_domain = 0;           // unconsumed input or bad encoding
  std::uint64_t too_slow = 0;                // budget or prefix cost above the bound
  std::uint64_t loops = 0;
};

struct PredictorResult {
  BitString target_output;
  std::uint64_t t_of_x = 0;
  Program canonical;             // x#: quasi-lex least program achieving t(x)
  std::uint64_t witnesses = 0;   // programs with output target_output and time t(x)
  SearchCertificate certificate;
};

// Exact minimal running time of U over all programs producing U(x).
// Sound and complete because every program z satisfies |z| <= T_U(z): the
// search only extends prefixes whose run asked for more input and whose
// step count is still within the current best.  Throws DomainError if x
// does not halt within `budget`.
PredictorResult min_time(const Program& x, RegisterMode mode = RegisterMode::capped(),
                         std::uint64_t budget = 1000000);

Program canonical_program(const Program& x, RegisterMode mode = RegisterMode::capped(),
                          std::uint64_t budget = 1000000);

struct SuiteEntry {
  std::string name;
  MachineDescription machine;
  Program input;
};

struct SlowdownRow {
  std::string name;
  Program input;
  std::uint64_t t_c = 0;          // T_C(x)
  std::size_t encoded_len = 0;    // |x'| = |encode(C)| + |x|
  std::uint64_t t_u = 0;          // T_U(x')
  double ratio = 0.0;
};

struct SlowdownReport {
  std::vector<SlowdownRow> rows;
  double min_ratio = 0.0;
  double median_ratio = 0.0;
  double max_ratio = 0.0;
  bool all_slower = false;  // T_U(x') > T_C(x) on every row
};

// Throws DomainError if an entry does not halt (directly or under U).
SlowdownReport slowdown_report(const std::vector<SuiteEntry>& suite,
                               std::uint64_t budget = 1000000,
                               RegisterMode mode = RegisterMode::unbounded());

std::string slowdown_csv(const SlowdownReport& report);

// Five reference machines, each paired with its first 20 domain inputs.
std::vector<SuiteEntry> default_suite();

// The reference machines on their own (name, machine).
std::vector<std::pair<std::string, MachineDescription>> reference_machines();

}  // namespace uncomp
