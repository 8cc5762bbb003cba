#ifndef PONTCALC_FUNDAMENTAL_HPP
#define PONTCALC_FUNDAMENTAL_HPP

#include "pontcalc/complex.hpp"

namespace pontcalc {

struct FundamentalClass {
  SystemPtr system;  // orientation local system; null when orientable
  Chain cycle;       // top-degree twisted cycle, coefficients +-1
  bool orientable = false;
};

// Closed pseudomanifold checks (purity, each codimension-1 face in exactly
// two top simplices, dual-graph connectivity); throws structure_error.
void check_closed_pseudomanifold(const OrderedComplex& x, int n);

// The orientation local system and the twisted fundamental cycle.  For
// orientable complexes the system is gauged to the trivial one.
FundamentalClass fundamental_class(const OrderedComplex& x, int n);

}  // namespace pontcalc

#endif
