#include "treeschur/parallel.hpp"

#include <cstdlib>
#include <string>

namespace treeschur {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TREESCHUR_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j > 0) return j;
    } catch (...) {
      // fall through to the OpenMP default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace treeschur
