#ifndef PONTCALC_CHERN_HPP
#define PONTCALC_CHERN_HPP

#include <map>
#include <utility>
#include <vector>

#include "pontcalc/assoc.hpp"
#include "pontcalc/complex.hpp"

namespace pontcalc {

// Orientation data for the circle quasifibration: one chirotope
// representative per Y element (the lexicographically least independent pair
// is positive), the correspondingly oriented fiber circles, and the
// comparison signs along Y edges.
struct FiberOrientation {
  std::vector<Chirotope> chi;
  std::vector<std::vector<SignVec>> circle;  // oriented cyclic cell sequence
  std::vector<std::vector<std::int8_t>> eps;  // comparison sign per comparable pair
};

// The fiberwise cocycle over one vertex: value on each forward traversal
// step of the oriented circle (uniform, total 1 around the fiber).
std::vector<Rat> theta_vertex(const FiberOrientation& o, int yelem);
// Same for an abstract polygon fiber with the given number of cells in its
// order-complex circle.
Rat theta_uniform(int order_complex_edges);

// The restriction of Theta to the preimage of a closed Y edge (u < v),
// u-framed: values on the cross edges, indexed by circle positions.
struct ThetaEdge {
  int eps = 0;                                   // orientation comparison
  std::vector<std::pair<int, int>> cross;        // (pos in circle_u, pos in circle_v)
  std::vector<Rat> value;                        // aligned with cross
  std::vector<int> component;                    // constraint-graph component per cross edge

  const Rat* at(int pu, int pv) const;
};

class ChernData {
 public:
  explicit ChernData(const AssocPosets& a);

  const AssocPosets& posets() const { return *a_; }
  const FiberOrientation& orientation() const { return orient_; }

  // Minimum-norm cocycle on rho^{-1}(closed edge): the cocycle conditions
  // are difference constraints on the cross values, so the feasible set is
  // a translate of the per-component constant functions and the minimizer
  // centers each component.  Throws structure_error when infeasible in both
  // frames.  Results are memoized by the literal cross structure.
  const ThetaEdge& theta_edge(int u, int v);

  void verify_orientation_cocycle() const;

  // Twisted curvature value on the triangle u < v < w (u-framed): the
  // holonomy of the three edge cocycles, checked constant over all
  // admissible fiber flags.
  Rat omega_value(int u, int v, int w);

  // Assembles the orientation local system and the full twisted 2-cocycle
  // on the given order complex of Y (vertex i = Y element i).
  SystemPtr orientation_system(const OrderedComplex& ycx) const;
  Cochain omega(const OrderedComplex& ycx);

 private:
  const AssocPosets* a_;
  FiberOrientation orient_;
  std::map<std::pair<int, int>, ThetaEdge> edges_;
  std::map<std::vector<std::uint64_t>, ThetaEdge> memo_;

  ThetaEdge solve_edge(int u, int v) const;
};

// Order complex of the Y poset up to the given dimension.
OrderedComplex y_order_complex(const AssocPosets& a, int max_dim);

// Test oracle: the orientation comparison recomputed by deciding which of
// cycle_u -+ cycle_v bounds in the homology of the edge preimage.
int eps_homology_oracle(const AssocPosets& a, const FiberOrientation& o, int u, int v);

// Test oracle: the edge solve redone as a dense equality-constrained least
// squares problem.
std::vector<Rat> theta_edge_dense_oracle(const AssocPosets& a, const FiberOrientation& o,
                                         int u, int v, int eps,
                                         const std::vector<std::pair<int, int>>& cross);

}  // namespace pontcalc

#endif
