#pragma once

#include <omp.h>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>

namespace rlc {

/// Worker count: `requested` if positive, else $RLC_WORKERS, else the
/// OpenMP default.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RLC_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return omp_get_max_threads();
}

/// Runs body(i, local) for i in [0, count) on `workers` OpenMP threads, each
/// with its own accumulator copied from `init`, then folds the locals into
/// the result with merge(result, local). Merges must be commutative sums so
/// the result does not depend on scheduling. The first exception thrown by a
/// body is rethrown after the loop.
template <class State, class Body, class Merge>
State parallel_for_each(std::uint64_t count, int workers, const State& init, Body&& body, Merge&& merge) {
  State result = init;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
#pragma omp parallel num_threads(workers)
  {
    State local = init;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(static_cast<std::uint64_t>(i), local);
      } catch (...) {
#pragma omp critical(rlc_parallel_error)
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
#pragma omp critical(rlc_parallel_merge)
    merge(result, local);
  }
  if (error) std::rethrow_exception(error);
  return result;
}

/// Serial reference for parallel_for_each: same bodies, one accumulator.
template <class State, class Body>
State serial_for_each(std::uint64_t count, const State& init, Body&& body) {
  State result = init;
  for (std::uint64_t i = 0; i < count; ++i) body(i, result);
  return result;
}

}  // namespace rlc
