#include <algorithm>

#include "pontcalc/flatten.hpp"

namespace pontcalc {

Model make_torus_model(int m, int k) {
  if (m < 3 || k < 3) throw input_error("torus model needs a grid of at least 3x3");
  Model out;
  auto vid = [&](int i, int j) { return ((j % k + k) % k) * m + ((i % m + m) % m); };
  int nv = m * k;
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      facets.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      facets.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
    }
  out.tri.cx = OrderedComplex::from_facets(nv, facets);
  out.tri.n = 2;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) out.tri.labels.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
  // Flat metric: the chart at (i,j) sends each neighbor to its lattice
  // displacement.
  const int dirs[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  out.atlas.star_coords.resize(nv);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      int v = vid(i, j);
      out.atlas.star_coords[v][v] = {Rat(0), Rat(0)};
      for (const auto& d : dirs) {
        int w = vid(i + d[0], j + d[1]);
        out.atlas.star_coords[v][w] = {Rat(d[0]), Rat(d[1])};
      }
    }
  out.atlas.model_tag = "torus-" + std::to_string(m) + "x" + std::to_string(k);
  return out;
}

Model make_circle_model(int sides) {
  if (sides < 3) throw input_error("circle model needs at least 3 sides");
  Model out;
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < sides; ++i) facets.push_back({i, (i + 1) % sides});
  out.tri.cx = OrderedComplex::from_facets(sides, facets);
  out.tri.n = 1;
  for (int i = 0; i < sides; ++i) out.tri.labels.push_back("p" + std::to_string(i));
  out.atlas.star_coords.resize(sides);
  for (int v = 0; v < sides; ++v) {
    out.atlas.star_coords[v][v] = {Rat(0)};
    out.atlas.star_coords[v][(v + 1) % sides] = {Rat(1)};
    out.atlas.star_coords[v][(v + sides - 1) % sides] = {Rat(-1)};
  }
  out.atlas.model_tag = "circle-" + std::to_string(sides);
  return out;
}

const std::vector<std::vector<int>>& cp2_facets() {
  // The unique 9-vertex triangulation of CP^2 (invariant under the
  // Z3 x Z3 translations on vertices (i,j) -> 3i+j).
  static const std::vector<std::vector<int>> facets = {
      {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7},
      {0, 1, 3, 6, 7}, {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8}, {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8},
      {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8}, {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8},
      {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7}, {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8},
      {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8}, {1, 2, 4, 5, 7},
      {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
      {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8},
      {3, 4, 5, 7, 8}};
  return facets;
}

Model make_cp2_model() {
  Model out;
  out.tri.cx = OrderedComplex::from_facets(9, cp2_facets());
  out.tri.n = 4;
  for (int i = 0; i < 9; ++i) out.tri.labels.push_back("w" + std::to_string(i));
  // Every vertex star covers all 9 vertices (the complex is 2-neighborly).
  // A flat-chart approximation: place the 8 link vertices of each star at a
  // fixed spread-out rational configuration in Q^4.  This is an
  // approximation; chart validation decides whether it is usable.
  const long pts[8][4] = {{1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
                          {-1, 1, 1, 2}, {1, -1, 2, 1}, {2, 1, -1, 1}, {-1, -2, -1, -1}};
  out.atlas.star_coords.resize(9);
  for (int v = 0; v < 9; ++v) {
    out.atlas.star_coords[v][v] = {Rat(0), Rat(0), Rat(0), Rat(0)};
    int t = 0;
    for (int w = 0; w < 9; ++w) {
      if (w == v) continue;
      out.atlas.star_coords[v][w] = {Rat(pts[t][0]), Rat(pts[t][1]), Rat(pts[t][2]),
                                     Rat(pts[t][3])};
      ++t;
    }
  }
  out.atlas.model_tag = "cp2-9";
  return out;
}

}  // namespace pontcalc
