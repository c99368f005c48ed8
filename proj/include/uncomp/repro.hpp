#pragma once

// The acceptance suite, shared by the `repro` subcommand and the
// acceptance test binary.

#include <string>
#include <vector>

namespace uncomp {

struct ReproOptions {
  unsigned jobs = 4;  // worker count for the parallel reruns
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

// Pinned values measured on this implementation.
inline constexpr double kGoldenMinSlowdownRatio = 1.3620689655172413;  // 79/58

// Throws DomainError for an id outside 1..kCriterionCount.  Exceptions from
// the modules are caught and reported as failures.
CriterionResult run_criterion(int id, const ReproOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const ReproOptions& opts = {});

// The families used by criterion 9.
extern const char* const kFermatCubicFamily;
extern const char* const kFermatFamily;  // parameter s, exponent s + 3
extern const char* const kPythagoreanFamily;

}  // namespace uncomp
