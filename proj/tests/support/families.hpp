#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bub/sweep.hpp"

namespace bub::testing {

/// One acceptance criterion as a batch of independent trials.
struct Criterion {
  std::string id;
  std::string title;
  /// Wall-clock budget in seconds; 0 means none stated.
  double budget_s = 0;
  std::function<Tally(Runner)> run;
};

/// `scale` shrinks the randomized trial counts (1.0 = full acceptance sizes).
std::vector<Criterion> acceptance_criteria(double scale = 1.0);

/// Individual families, exposed for the benchmark.
Tally classic_stiefel(Runner runner);
Tally remark_equivalence(Runner runner, std::size_t trials);
Tally ring_soundness(Runner runner, std::size_t trials_per_family, std::size_t divisions);
Tally lucas_vs_exact(Runner runner, int nmax);

}  // namespace bub::testing
