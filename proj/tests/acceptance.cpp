// One line per acceptance criterion: id, PASS/FAIL, trial counts, time vs budget.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "support/families.hpp"

int main(int argc, char** argv) {
  double scale = 1.0;
  const char* only = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc) scale = std::atof(argv[++i]);
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = argv[++i];
  }
  int failed = 0;
  for (const auto& c : bub::testing::acceptance_criteria(scale)) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const bub::Tally t = c.run(bub::Runner::Parallel);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_s <= 0 || secs < c.budget_s;
    const bool pass = t.ok() && in_time;
    failed += pass ? 0 : 1;
    char budget[32] = "none";
    if (c.budget_s > 0) std::snprintf(budget, sizeof budget, "%.0fs", c.budget_s);
    std::printf("%s %s  trials=%zu failures=%zu time=%.2fs budget=%s  %s\n", c.id.c_str(), pass ? "PASS" : "FAIL",
                t.trials, t.failures, secs, budget, c.title.c_str());
    if (!t.ok()) std::printf("    first failure (trial %zu): %s\n", *t.first_index, t.first_failure.c_str());
    if (!in_time) std::printf("    over budget\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
