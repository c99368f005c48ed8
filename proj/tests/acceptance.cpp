// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <algorithm>
#include <cstdlib>

#include "uncomp/repro.hpp"

int main() {
  uncomp::ReproOptions opts;
  if (const char* env = std::getenv("UNCOMP_JOBS")) opts.jobs = std::max(2, std::atoi(env));
  int failed = 0;
  for (int id = 1; id <= uncomp::kCriterionCount; ++id) {
    const auto r = uncomp::run_criterion(id, opts);
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/%d criteria passed\n", uncomp::kCriterionCount - failed, uncomp::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
