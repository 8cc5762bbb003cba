#include "pontcalc/flatten.hpp"

#include <algorithm>

namespace pontcalc {

int Triangulation::vertex_by_label(const std::string& s) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return (int)i;
  throw input_error("unknown vertex label: " + s);
}

bool Triangulation::has_simplex(std::vector<int> s) const {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return cx.find((int)s.size() - 1, s) >= 0;
}

std::vector<int> Triangulation::star_vertices(const std::vector<int>& delta) const {
  std::vector<int> out;
  for (int w = 0; w < cx.vertex_count(); ++w) {
    std::vector<int> s = delta;
    s.push_back(w);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (cx.find((int)s.size() - 1, s) >= 0) out.push_back(w);
  }
  return out;
}

std::uint64_t star_mask(const Triangulation& tri, const std::vector<int>& carrier) {
  std::uint64_t m = 0;
  for (int v : tri.star_vertices(carrier)) m |= std::uint64_t(1) << v;
  return m;
}

VectorArrangement flatten_at(const Model& m, const BaryPoint& p) {
  const Triangulation& tri = m.tri;
  if (p.carrier.empty() || p.carrier.size() != p.weights.size())
    throw input_error("flatten_at: malformed point");
  if (!tri.has_simplex(p.carrier)) throw input_error("flatten_at: point outside complex");
  Rat total = 0;
  for (const auto& w : p.weights) {
    if (w <= 0) throw input_error("flatten_at: weights must be positive on the carrier");
    total += w;
  }
  if (total != 1) throw input_error("flatten_at: weights must sum to 1");

  int frame = *std::min_element(p.carrier.begin(), p.carrier.end());
  const auto& chart = m.atlas.star_coords.at(frame);
  int n = tri.n;
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < p.carrier.size(); ++i) {
    auto it = chart.find(p.carrier[i]);
    if (it == chart.end()) throw input_error("flatten_at: atlas does not cover the carrier");
    for (int d = 0; d < n; ++d) x[d] += p.weights[i] * it->second[d];
  }

  VectorArrangement arr;
  arr.columns.assign(tri.cx.vertex_count(), std::vector<Rat>(n, Rat(0)));
  for (int v : tri.star_vertices(p.carrier)) {
    auto it = chart.find(v);
    if (it == chart.end()) throw input_error("flatten_at: atlas does not cover star vertex");
    for (int d = 0; d < n; ++d) arr.columns[v][d] = it->second[d] - x[d];
  }
  return arr;
}

}  // namespace pontcalc
