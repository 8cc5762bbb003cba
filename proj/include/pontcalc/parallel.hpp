#ifndef PONTCALC_PARALLEL_HPP
#define PONTCALC_PARALLEL_HPP

#include <cstddef>

namespace pontcalc {

// Thread budget for OpenMP kernels.  Resolution order: explicit set_threads()
// call, then the PONTCALC_THREADS environment variable, then the OpenMP
// default.  Every parallel kernel writes into preassigned slots so results are
// identical for any thread count.
int thread_count();
void set_threads(int n);

}  // namespace pontcalc

#endif
