#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tstar::par {

/// Deterministic parallel map: item i computes out[i] = f(i) independently,
/// results are assembled by index so the output never depends on scheduling.
/// The first exception thrown by any item is rethrown after the join.
template <class T, class F>
std::vector<T> map_indexed(long n, bool parallel, F&& f) {
  std::vector<T> out(static_cast<std::size_t>(n));
  if (!parallel) {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
    return out;
  }
  std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(i);
    } catch (...) {
#pragma omp critical
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace tstar::par
