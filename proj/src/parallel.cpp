#include "pontcalc/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace pontcalc {

namespace {
int g_threads = 0;  // 0 = unresolved
}

int thread_count() {
  if (g_threads > 0) return g_threads;
  if (const char* env = std::getenv("PONTCALC_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) {
      g_threads = n;
      return g_threads;
    }
  }
  g_threads = omp_get_max_threads();
  return g_threads;
}

void set_threads(int n) {
  if (n > 0) g_threads = n;
}

}  // namespace pontcalc
