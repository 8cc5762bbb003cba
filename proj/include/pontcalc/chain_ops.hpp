#ifndef PONTCALC_CHAIN_OPS_HPP
#define PONTCALC_CHAIN_OPS_HPP

#include "pontcalc/complex.hpp"

namespace pontcalc {

// Alternating-sum boundary with local-system transport: the coefficient is
// anchored at the least vertex, so only the face omitting it picks up the
// transport sign along the leading edge.
Chain boundary(const Chain& c);

// Simplicial coboundary, dual to the boundary above.  The parallel kernel
// scans all (deg+1)-simplices; the serial variant is the reference kept for
// testing.
Cochain coboundary(const Cochain& c);
Cochain coboundary_serial(const Cochain& c);

// Front/back-face cup product on an ordered complex; systems tensor.
Cochain cup(const Cochain& a, const Cochain& b);
Cochain cup_serial(const Cochain& a, const Cochain& b);

// Cap product, front-face convention: psi eats the front deg(psi) vertices,
// the back face survives.
Chain cap(const Chain& c, const Cochain& psi);
// Independent implementation (back-face-major enumeration, path-product
// transport); used to cross-check the primary route.
Chain cap_dual(const Chain& c, const Cochain& psi);

// Chain-level pushforward: simplices with collapsed image map to zero.  The
// chain's system must be the pullback of target_sys along f.
Chain pushforward(const SimplicialMap& f, const Chain& c, SystemPtr target_sys = nullptr);
Chain pushforward_dual(const SimplicialMap& f, const Chain& c, SystemPtr target_sys = nullptr);

Cochain unit_cochain(const OrderedComplex& cx, SystemPtr sys = nullptr);

Cochain cochain_power(const Cochain& base, int k, const OrderedComplex& cx);

SystemPtr pullback_system(const SimplicialMap& f, const SystemPtr& target_sys);

// Barycentric subdivision: the order complex of the face poset of x, the
// last-vertex map back to x, and the subdivision chain map.
struct BarycentricData {
  OrderedComplex cx;
  const OrderedComplex* base = nullptr;
  std::vector<std::pair<int, int>> elems;  // poset id -> (dim, index) in base
  std::vector<std::vector<int>> elem_of;   // [dim][index] -> poset id
  SimplicialMap last_vertex;               // Cx(base) -> base
};

BarycentricData barycentric(const OrderedComplex& x);

// Subdivision chain map C_*(X; sys) -> C_*(Cx X; pullback sys), with
// coefficient transport inside each simplex.
Chain sd_chain(const BarycentricData& b, const Chain& c);

}  // namespace pontcalc

#endif
