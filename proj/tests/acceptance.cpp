// One line per acceptance criterion; exits nonzero if any fails or runs
// past its time limit.
#include <cstdio>

#include "hline/acceptance.hpp"

int main() {
  hline::acceptance::Options opts;
  bool all = true;
  hline::acceptance::run_all(opts, [&](const hline::acceptance::CriterionResult& r) {
    const bool in_time = r.limit_seconds == 0 || r.seconds <= r.limit_seconds;
    const bool ok = r.passed && in_time;
    all = all && ok;
    std::printf("criterion %2d: %s  %7.2fs", r.id, ok ? "PASS" : "FAIL", r.seconds);
    if (r.limit_seconds > 0) std::printf(" (limit %.0fs)", r.limit_seconds);
    std::printf("  %s", r.name.c_str());
    if (!in_time) std::printf("  [over time]");
    if (!r.detail.empty()) std::printf("\n              %s", r.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  });
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
