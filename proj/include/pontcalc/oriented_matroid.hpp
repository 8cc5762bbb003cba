#ifndef PONTCALC_ORIENTED_MATROID_HPP
#define PONTCALC_ORIENTED_MATROID_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pontcalc/chirotope.hpp"
#include "pontcalc/matrix.hpp"
#include "pontcalc/rational.hpp"
#include "pontcalc/sign_vector.hpp"

namespace pontcalc {

// Arrangement of column vectors over an ordered ground set {0..n-1}.
struct VectorArrangement {
  std::vector<std::vector<Rat>> columns;  // columns[e] has length dim

  std::size_t size() const { return columns.size(); }
  std::size_t dim() const { return columns.empty() ? 0 : columns[0].size(); }
};

// An oriented matroid in covector form.  `covectors` is the full covector
// set, sorted under the fixed total order on sign vectors; that sorted list
// is the canonical form used for equality.  When the OM was produced from a
// chirotope or a vector arrangement we keep one representative of the pair
// {chi, -chi}; orientation-sensitive consumers pick their own representative.
struct OrientedMatroid {
  std::uint8_t n = 0;
  std::uint8_t rank = 0;
  std::vector<SignVec> covectors;
  std::optional<Chirotope> chi;

  bool operator==(const OrientedMatroid& o) const {
    return n == o.n && rank == o.rank && covectors == o.covectors;
  }

  std::uint64_t nonloop_mask() const;
  bool is_loop(int e) const { return !(nonloop_mask() >> e & 1); }
};

// Rank of a covector set as a subposet of {0,+,-}^E (longest chain length).
int covector_poset_rank(const std::vector<SignVec>& covectors);

// All four covector axioms, checked literally (quantified over all covector
// pairs and elimination elements).
bool covector_axioms_ok(const OrientedMatroid& m);

int arrangement_rank(const VectorArrangement& arr);

// The oriented matroid of a vector arrangement: chirotope from r x r minors,
// covectors as compositions of cocircuits.  Throws rank_error when the
// arrangement does not span the declared rank.
OrientedMatroid om_from_vectors(const VectorArrangement& arr, int r);

OrientedMatroid om_from_chirotope(const Chirotope& chi);

// Predicates (Appendix-C style definitions).
std::vector<int> loops(const OrientedMatroid& m);
bool is_independent(const OrientedMatroid& m, const std::vector<int>& subset);
int subset_rank(const OrientedMatroid& m, const std::vector<int>& subset);
// e in conv(A): every covector positive on all of A is positive on e.
bool in_convex_hull(const OrientedMatroid& m, int e, const std::vector<int>& a);

// Degeneration order: every covector of n_ is dominated by a covector of m.
bool weak_map(const OrientedMatroid& m, const OrientedMatroid& n_);
// Chirotope route for the same relation, for cross-checking: some choice of
// representatives has chi_N(t) in {chi_M(t), 0} for all tuples.
bool weak_map_chirotope(const OrientedMatroid& m, const OrientedMatroid& n_);

// Covector containment V*(n_) subseteq V*(m).
bool strong_map_image(const OrientedMatroid& m, const OrientedMatroid& n_);

// Deletion to the elements in `mask`: covectors restricted, elements outside
// the mask kept as loops.
OrientedMatroid restrict_to(const OrientedMatroid& m, std::uint64_t mask);

// The alternating cyclic sequence c_0 < T_0 > c_1 < T_1 ... of rank-1 and
// rank-2 covectors of a rank 2 OM: the face poset of a 2k-gon.  Exactly the
// nonzero covectors, each once.  Throws rank_error unless rank(m) == 2.
std::vector<SignVec> rank2_circle(const OrientedMatroid& m);

// Chirotope of a rank-2 OM read off its cocircuits; returns the
// representative with + on the lexicographically least independent pair.
Chirotope rank2_chirotope(const OrientedMatroid& m);

// Walks the circle of a rank-2 OM in the positive direction determined by a
// chirotope representative.  Starting cell is the least cocircuit.
std::vector<SignVec> rank2_circle_oriented(const OrientedMatroid& m, const Chirotope& chi);

// Complete set of rank-2 strong map images of a rank-3 arrangement,
// enumerated via the great-circle arrangement on S^2 cut out by the planes
// span(v_i, v_j); one quotient per cell, deduplicated by covector set.
std::vector<OrientedMatroid> rank2_quotients_of_rank3(const VectorArrangement& arr);

// Rank-2 quotient of an arrangement by projection onto the plane spanned by
// basis vectors p, q (exact).  Used for sampled projections of higher-rank
// charts and for tests.
OrientedMatroid rank2_projection(const VectorArrangement& arr, const std::vector<Rat>& p,
                                 const std::vector<Rat>& q);

}  // namespace pontcalc

#endif
