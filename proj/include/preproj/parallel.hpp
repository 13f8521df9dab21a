#pragma once

// The one place OpenMP is used. Kernels take an Execution tag so that the
// serial loop stays available as the reference the parallel one is tested
// against.

#include <cstddef>
#include <exception>
#include <mutex>

namespace preproj {

enum class Execution { Serial, Parallel };

int worker_threads();

/// Calls f(i) for i in [0, n). Exceptions thrown by f are rethrown on the
/// calling thread (the first one wins).
template <class F>
void for_each_index(std::size_t n, Execution ex, F&& f) {
  if (ex == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
  long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace preproj
