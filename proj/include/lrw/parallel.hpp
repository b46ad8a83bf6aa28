#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef LRW_HAVE_OPENMP
#include <omp.h>
#endif

namespace lrw::detail {

/// Runs body(i) for i in [0, count) across OpenMP threads. The first
/// exception thrown by any iteration is rethrown on the calling thread.
/// Callers write into per-index slots and merge afterwards, so results do not
/// depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
#ifdef LRW_HAVE_OPENMP
  std::exception_ptr failure;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(lrw_parallel_for_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

inline int worker_count() {
#ifdef LRW_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lrw::detail
