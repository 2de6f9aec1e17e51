#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powertree {

enum class Execution { kSerial, kParallel };

// Worker count for parallel kernels: POWERTREE_THREADS if set and positive,
// otherwise the OpenMP default.
inline int thread_count() {
  if (const char* env = std::getenv("POWERTREE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace powertree
