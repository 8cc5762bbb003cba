#ifndef PONTCALC_CHARTS_HPP
#define PONTCALC_CHARTS_HPP

#include <string>
#include <vector>

#include "pontcalc/flatten.hpp"
#include "pontcalc/oriented_matroid.hpp"

namespace pontcalc {

enum class Flavor { affine, linear };

inline const char* flavor_name(Flavor f) { return f == Flavor::affine ? "affine" : "linear"; }

// Rank-n OM of the flattening vectors (zero columns stay loops).
OrientedMatroid linear_chart(const VectorArrangement& arr, int n);
// Rank-(n+1) OM of the vectors with an appended coordinate 1 on the star.
// Only columns in star_mask get the 1; others remain zero columns.
OrientedMatroid affine_chart(const VectorArrangement& arr, int n, std::uint64_t star);

struct ChartReport {
  bool valid = true;
  std::vector<std::string> violations;

  void fail(const std::string& v) {
    valid = false;
    violations.push_back(v);
  }
};

// Checks every clause of the chart definitions at delta.
ChartReport validate_chart(const OrientedMatroid& m, const std::vector<int>& delta,
                           const Triangulation& x, Flavor flavor);

// A cell of the subdivision X^: a geometric simplex inside ||carrier||,
// corners in barycentric coordinates over the carrier.
struct CDCell {
  int dim = 0;
  std::vector<int> carrier;               // sorted vertex ids of X
  std::vector<std::vector<Rat>> corners;  // corner x carrier-weight matrix
};

struct CDManifold {
  const Model* model = nullptr;
  Flavor flavor = Flavor::affine;
  int refine_depth = 0;
  std::vector<CDCell> cells;                // sorted by (dim, carrier, corners)
  std::vector<std::vector<char>> leq;       // cell partial order (closure containment)
  std::vector<OrientedMatroid> charts;      // one per cell
  std::vector<VectorArrangement> arrs;      // realizing arrangement per cell
  std::vector<std::uint64_t> star_masks;    // star(carrier)^0 per cell

  int cell_count() const { return (int)cells.size(); }
};

// Interior barycenter of a cell as a point of ||X||.
BaryPoint cell_barycenter(const CDCell& c);

// Builds the coarsest certified subdivision: starts from the face poset of
// X, certifies chart constancy per open cell exactly (the chart minors are
// affine in the base point, so corner signs decide), halves failing 1-cells,
// falls back to barycentric subdivision for higher failures; depth capped.
CDManifold build_cd(const Model& model, Flavor flavor, int refine_cap = 3);

// The weak-map compatibility audit for all comparable cell pairs.
ChartReport cd_weak_map_audit(const CDManifold& cd);

}  // namespace pontcalc

#endif
