#include "bub/sweep.hpp"

#include <exception>

namespace bub {

namespace {

std::optional<std::string> guarded(const Trial& trial, std::size_t i) {
  try {
    return trial(i);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  } catch (...) {
    return std::string("unknown exception");
  }
}

void record(Tally& t, std::size_t i, std::string msg) {
  ++t.failures;
  if (!t.first_index || i < *t.first_index) {
    t.first_index = i;
    t.first_failure = std::move(msg);
  }
}

}  // namespace

Tally run_serial(std::size_t count, const Trial& trial) {
  Tally t;
  t.trials = count;
  for (std::size_t i = 0; i < count; ++i)
    if (auto f = guarded(trial, i)) record(t, i, std::move(*f));
  return t;
}

Tally run_parallel(std::size_t count, const Trial& trial) {
  Tally t;
  t.trials = count;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    auto f = guarded(trial, static_cast<std::size_t>(i));
    if (f) {
#pragma omp critical(bub_sweep_record)
      record(t, static_cast<std::size_t>(i), std::move(*f));
    }
  }
  return t;
}

Tally run(Runner runner, std::size_t count, const Trial& trial) {
  return runner == Runner::Serial ? run_serial(count, trial) : run_parallel(count, trial);
}

}  // namespace bub
