#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <vector>

// Index-parallel execution of pure per-slot work. Every parallel kernel in
// this library writes results into preallocated slots keyed by index, so the
// serial and OpenMP paths produce bit-identical output; the serial path is
// kept as the reference implementation for the consistency tests.

namespace dpwell {

enum class ExecPolicy { serial, parallel };

template <class F>
void for_each_index(std::size_t n, ExecPolicy policy, F&& f) {
  if (n == 0) return;
  if (policy == ExecPolicy::serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<bool> failed{false};
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  }
  if (failed.load()) {
    // rethrow the lowest-index failure, matching what the serial loop hits first
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
}

}  // namespace dpwell
