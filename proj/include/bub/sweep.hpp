#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace bub {

/// Outcome of a batch of independent trials.
struct Tally {
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Lowest failing index and its message (deterministic under both runners).
  std::optional<std::size_t> first_index;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
};

/// A trial returns a failure description, or nullopt on success. Exceptions
/// escaping a trial count as failures.
using Trial = std::function<std::optional<std::string>(std::size_t index)>;

Tally run_serial(std::size_t count, const Trial& trial);
/// OpenMP version of run_serial; trials must be independent.
Tally run_parallel(std::size_t count, const Trial& trial);

enum class Runner { Serial, Parallel };
Tally run(Runner runner, std::size_t count, const Trial& trial);

}  // namespace bub
