#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cgt::parallel {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int k) {
#ifdef _OPENMP
  if (k > 0) omp_set_num_threads(k);
#else
  (void)k;
#endif
}

// Execution lane selector. Kernels with both implementations take this so the
// serial path stays available as a reference for tests and benchmarks.
enum class Lane { serial, openmp };

}  // namespace cgt::parallel
