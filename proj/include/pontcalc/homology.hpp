#ifndef PONTCALC_HOMOLOGY_HPP
#define PONTCALC_HOMOLOGY_HPP

#include <optional>

#include "pontcalc/complex.hpp"
#include "pontcalc/sparse.hpp"

namespace pontcalc {

// Matrix of the twisted boundary C_k -> C_{k-1}.
SparseMat boundary_matrix(const OrderedComplex& cx, const SystemPtr& sys, int k);

// Q-rank of H_k(cx; sys).
int betti(const OrderedComplex& cx, const SystemPtr& sys, int k);

// A chain x with boundary(x) = c, when one exists.
std::optional<Chain> boundary_witness(const Chain& c);

// a - b = boundary(witness)?
bool homologous(const Chain& a, const Chain& b, Chain* witness = nullptr);

// A cochain psi with coboundary(psi) = target, when one exists.
std::optional<Cochain> coboundary_witness(const Cochain& target);

}  // namespace pontcalc

#endif
