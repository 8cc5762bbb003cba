#ifndef PONTCALC_FLATTEN_HPP
#define PONTCALC_FLATTEN_HPP

#include <map>
#include <string>
#include <vector>

#include "pontcalc/complex.hpp"
#include "pontcalc/oriented_matroid.hpp"

namespace pontcalc {

struct Triangulation {
  OrderedComplex cx;
  std::vector<std::string> labels;
  int n = 0;  // manifold dimension

  int vertex_by_label(const std::string& s) const;
  // star(delta)^0 as a sorted vertex list; delta given by vertex ids.
  std::vector<int> star_vertices(const std::vector<int>& delta) const;
  bool has_simplex(std::vector<int> s) const;
};

// Per-vertex star coordinates: for each vertex v a map from the vertices of
// star(v) to exact points in Q^n with v at the origin.  Charts of
// overlapping stars must agree up to affine change of chart; for the flat
// model generators they are literal translates.
struct FlatteningAtlas {
  std::vector<std::map<int, std::vector<Rat>>> star_coords;
  std::string model_tag;  // "torus-MxK", "circle-S", "custom", ...
};

struct Model {
  Triangulation tri;
  FlatteningAtlas atlas;
};

// A rational point of ||X||: the carrier simplex and strictly positive
// barycentric weights over it.
struct BaryPoint {
  std::vector<int> carrier;  // sorted vertex ids
  std::vector<Rat> weights;  // same length, positive, sum 1
};

// The flattening-induced vector arrangement at p, over the full ground set
// X^0: f_p(v) for v in star(carrier)^0, zero columns elsewhere (loops are
// carried downstream).  Coordinates taken in the chart of the least carrier
// vertex.
VectorArrangement flatten_at(const Model& m, const BaryPoint& p);

// Mask of star(carrier)^0.
std::uint64_t star_mask(const Triangulation& tri, const std::vector<int>& carrier);

// Built-in flat models.
Model make_torus_model(int m, int k);
Model make_circle_model(int sides);
Model make_cp2_model();  // Kuehnel 9-vertex complex plus an attempted flat atlas

// The 36 facets of the 9-vertex complex projective plane.
const std::vector<std::vector<int>>& cp2_facets();

}  // namespace pontcalc

#endif
