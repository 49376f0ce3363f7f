#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ader {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

/// Runs body(i, thread) for i in [0, n). The first exception raised by any
/// iteration is rethrown on the calling thread once the loop has finished.
template <class Body>
void parallel_for(int n, Body&& body) {
  std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    int thread = 0;
#ifdef _OPENMP
    thread = omp_get_thread_num();
#endif
    try {
      body(i, thread);
    } catch (...) {
#pragma omp critical(ader_parallel_error)
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ader
