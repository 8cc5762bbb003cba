#ifndef PONTCALC_ASSOC_HPP
#define PONTCALC_ASSOC_HPP

#include <cstdint>
#include <vector>

#include "pontcalc/charts.hpp"

namespace pontcalc {

// Element of the restricted associated poset Y: the chart cell carries
// (Delta, t) and y is a rank-2 strong map image of t.
struct YElem {
  int cell = -1;  // index into CDManifold cells/charts
  int y = -1;     // index into AssocPosets::oms
};

struct ZElem {
  int yelem = -1;
  SignVec z;  // nonzero covector of y
};

struct AssocPosets {
  const CDManifold* cd = nullptr;
  std::vector<YElem> elems;                 // indices form a linear extension
  std::vector<OrientedMatroid> oms;         // interned y pool
  std::vector<std::vector<char>> leq;       // Y order
  std::vector<std::vector<SignVec>> fiber;  // rank2_circle(y) per Y element
  bool exhaustive = true;

  const OrientedMatroid& y_of(int e) const { return oms[elems[e].y]; }
  const std::vector<int>& delta_of(int e) const { return cd->cells[elems[e].cell].carrier; }
  std::uint64_t star_of(int e) const { return cd->star_masks[elems[e].cell]; }
  const OrientedMatroid& t_of(int e) const { return cd->charts[elems[e].cell]; }

  // Z elements in a fixed global order: fibers in Y-element order, covectors
  // in circle order.
  int z_count() const;
  ZElem z_at(int idx) const;
  int z_index(int yelem, const SignVec& z) const;
};

// The corrected order relation on (Delta, t, y [, z]) tuples: Delta included,
// star-restrictions weakly mapped, z dominating.
bool assoc_order_y(const AssocPosets& a, int e1, int e2);
bool assoc_order_z(const AssocPosets& a, const ZElem& z1, const ZElem& z2);

// Builds the restricted posets generated by the CD atlas charts.  Quotient
// source: exact great-circle enumeration for rank-3 charts, identity for
// rank-2, deterministic sampled projections (exhaustive = false) otherwise.
AssocPosets build_restricted_yz(const CDManifold& cd);

// rank2_circle of y, asserted against the rho-fiber.
std::vector<SignVec> fiber_circle(const AssocPosets& a, int yelem);

struct QuasifibResult {
  bool ok = true;
  int witness_z = -1;  // global z index
  int witness_y = -1;
  std::string detail;
};

// Babson's criterion on the restricted posets: every up-set and down-set
// fiber is a nonempty proper arc of the fiber circle.  The parallel kernel
// distributes z elements; the serial variant is the testing reference.
QuasifibResult quasifib_check(const AssocPosets& a);
QuasifibResult quasifib_check_serial(const AssocPosets& a);

}  // namespace pontcalc

#endif
