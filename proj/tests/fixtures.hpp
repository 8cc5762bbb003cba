#ifndef PONTCALC_TESTS_FIXTURES_HPP
#define PONTCALC_TESTS_FIXTURES_HPP

#include <vector>

#include "pontcalc/oriented_matroid.hpp"
#include "pontcalc/rational.hpp"

namespace pontcalc::testing {

inline std::vector<Rat> rv(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

// Flattening at vertex a of the standard 9-vertex torus; ground order
// a,b,c,d,e,f,g (indices 0..6).
inline VectorArrangement torus_chart_a() {
  VectorArrangement arr;
  arr.columns = {rv({0, 0}),  rv({0, 1}),  rv({-1, 0}), rv({-1, -1}),
                 rv({0, -1}), rv({1, 0}),  rv({1, 1})};
  return arr;
}

inline VectorArrangement with_appended_one(const VectorArrangement& arr) {
  VectorArrangement out = arr;
  for (auto& c : out.columns) c.push_back(Rat(1));
  return out;
}

// Flattening at the point of edge ab with parameter t (t=0 at a), ground
// order a,b,c,g (indices 0..3).
inline VectorArrangement torus_chart_edge_ab(const Rat& t) {
  VectorArrangement arr;
  arr.columns = {{Rat(0), -t}, {Rat(0), 1 - t}, {Rat(-1), -t}, {Rat(1), 1 - t}};
  return arr;
}

inline VectorArrangement coordinate_vectors3() {
  VectorArrangement arr;
  arr.columns = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
  return arr;
}

}  // namespace pontcalc::testing

#endif
