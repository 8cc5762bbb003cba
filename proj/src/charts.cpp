#include "pontcalc/charts.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pontcalc/matrix.hpp"

namespace pontcalc {

OrientedMatroid linear_chart(const VectorArrangement& arr, int n) {
  return om_from_vectors(arr, n);
}

OrientedMatroid affine_chart(const VectorArrangement& arr, int n, std::uint64_t star) {
  VectorArrangement ext = arr;
  for (std::size_t e = 0; e < ext.columns.size(); ++e)
    ext.columns[e].push_back(star >> e & 1 ? Rat(1) : Rat(0));
  return om_from_vectors(ext, n + 1);
}

namespace {

// Simplices of star(delta): all tau with tau u delta in X.
std::vector<std::vector<int>> star_simplices(const Triangulation& x,
                                             const std::vector<int>& delta) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= x.cx.dim(); ++k)
    for (int i = 0; i < x.cx.count(k); ++i) {
      auto s = x.cx.simplex(k, i);
      std::vector<int> u(s.begin(), s.end());
      std::vector<int> merged = u;
      merged.insert(merged.end(), delta.begin(), delta.end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      if (x.cx.find((int)merged.size() - 1, merged) >= 0) out.push_back(u);
    }
  return out;
}

// Nonzero covector with Y(sigma) in {0,+} and Y(tau) in {0,-}.  The zero
// covector would satisfy the containments for any pair, so it is excluded;
// this is what rejects the overlapping-triangles configuration.
bool has_separating_covector(const OrientedMatroid& m, const std::vector<int>& sigma,
                             const std::vector<int>& tau) {
  for (const auto& y : m.covectors) {
    if (y.is_zero()) continue;
    bool ok = true;
    for (int e : sigma)
      if (y.at(e) < 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int e : tau)
      if (y.at(e) > 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::string simplex_str(const Triangulation& x, const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += x.labels[s[i]];
  }
  return out + "}";
}

}  // namespace

ChartReport validate_chart(const OrientedMatroid& m, const std::vector<int>& delta,
                           const Triangulation& x, Flavor flavor) {
  ChartReport rep;
  std::vector<int> star = x.star_vertices(delta);
  std::uint64_t star_bits = 0;
  for (int v : star) star_bits |= std::uint64_t(1) << v;
  std::uint64_t nonloops = m.nonloop_mask();
  auto simplices = star_simplices(x, delta);

  if (flavor == Flavor::affine) {
    if (m.rank != x.n + 1) rep.fail("rank: affine chart must have rank n+1");
    if (nonloops != star_bits)
      rep.fail("clause 1: nonloop elements differ from star(delta)^0");
    SignVec pos((std::uint8_t)m.n);
    for (int v : star) pos.set(v, 1);
    if (!std::binary_search(m.covectors.begin(), m.covectors.end(), pos))
      rep.fail("clause 2: no positive covector on the star");
    for (const auto& s : simplices)
      if (!is_independent(m, s))
        rep.fail("clause 3: star simplex " + simplex_str(x, s) + " is dependent");
    for (const auto& s : simplices)
      for (const auto& t : simplices) {
        if (s == t) continue;
        if (!has_separating_covector(m, s, t))
          rep.fail("clause 4: no covector separating " + simplex_str(x, s) + " from " +
                   simplex_str(x, t));
      }
  } else {
    if (m.rank != x.n) rep.fail("rank: linear chart must have rank n");
    if ((nonloops & ~star_bits) != 0)
      rep.fail("clause 1: nonloop element outside star(delta)^0");
    if (is_independent(m, delta)) rep.fail("clause 2: delta is independent");
    for (const auto& s : simplices) {
      bool is_boundary = false;
      for (int v : delta)
        if (!std::binary_search(s.begin(), s.end(), v)) is_boundary = true;
      if (!is_boundary) continue;
      if (!is_independent(m, s)) {
        rep.fail("clause 3: boundary simplex " + simplex_str(x, s) + " is dependent");
        continue;
      }
      for (int e = 0; e < m.n; ++e) {
        if (!(nonloops >> e & 1)) continue;
        if (std::binary_search(s.begin(), s.end(), e)) continue;
        if (in_convex_hull(m, e, s))
          rep.fail("clause 3: element " + x.labels[e] + " lies in conv " + simplex_str(x, s));
      }
    }
  }
  return rep;
}

namespace {

struct CellKey {
  int dim;
  std::vector<int> carrier;
  std::vector<std::vector<Rat>> corners;
  bool operator<(const CellKey& o) const {
    if (dim != o.dim) return dim < o.dim;
    if (carrier != o.carrier) return carrier < o.carrier;
    return corners < o.corners;
  }
};

CellKey key_of(const CDCell& c) {
  CellKey k{c.dim, c.carrier, c.corners};
  std::sort(k.corners.begin(), k.corners.end());
  return k;
}

// Chart columns at frame coordinates x: affine function of x per column.
std::vector<Rat> frame_coords(const Model& model, const CDCell& cell,
                              const std::vector<Rat>& weights) {
  int frame = cell.carrier.front();
  const auto& chart = model.atlas.star_coords.at(frame);
  int n = model.tri.n;
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < cell.carrier.size(); ++i) {
    const auto& c = chart.at(cell.carrier[i]);
    for (int d = 0; d < n; ++d) x[d] += weights[i] * c[d];
  }
  return x;
}

// Sign of the chart minor for the given tuple of star vertices at base point
// x (frame coordinates of the least carrier vertex).
int chart_minor_sign(const Model& model, const CDCell& cell, Flavor flavor,
                     const std::vector<int>& tuple, const std::vector<Rat>& x) {
  int frame = cell.carrier.front();
  const auto& chart = model.atlas.star_coords.at(frame);
  int n = model.tri.n;
  int r = flavor == Flavor::affine ? n + 1 : n;
  QMat mt(r, r);
  for (int j = 0; j < r; ++j) {
    const auto& c = chart.at(tuple[j]);
    for (int d = 0; d < n; ++d) mt(d, j) = c[d] - x[d];
    if (flavor == Flavor::affine) mt(n, j) = 1;
  }
  return sgn(det(mt));
}

OrientedMatroid chart_at(const Model& model, Flavor flavor, const BaryPoint& p) {
  VectorArrangement arr = flatten_at(model, p);
  if (flavor == Flavor::affine)
    return affine_chart(arr, model.tri.n, star_mask(model.tri, p.carrier));
  return linear_chart(arr, model.tri.n);
}

std::vector<Rat> mix_weights(const CDCell& cell, const std::vector<Rat>& mu) {
  std::vector<Rat> w(cell.carrier.size(), Rat(0));
  for (std::size_t c = 0; c < cell.corners.size(); ++c)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += mu[c] * cell.corners[c][i];
  return w;
}

// Five deterministic interior sample points per cell.
std::vector<std::vector<Rat>> interior_samples(const CDCell& cell, int count) {
  std::vector<std::vector<Rat>> out;
  std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t)cell.dim;
  for (int v : cell.carrier) state = state * 6364136223846793005ULL + v + 1442695040888963407ULL;
  int k = (int)cell.corners.size();
  for (int s = 0; s < count; ++s) {
    std::vector<Rat> mu(k);
    Rat total = 0;
    for (int i = 0; i < k; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      mu[i] = Rat(1 + (long)(state >> 40 & 0xff), 1);
      total += mu[i];
    }
    for (auto& v : mu) v /= total;
    out.push_back(mix_weights(cell, mu));
  }
  return out;
}

// Exact constancy certificate for one cell: every chart minor is affine in
// the base point, so corner signs decide the interior sign; any mixed corner
// pattern or sample mismatch fails the cell.
bool cell_constant(const Model& model, Flavor flavor, const CDCell& cell,
                   OrientedMatroid* chart_out) {
  std::vector<int> star = model.tri.star_vertices(cell.carrier);
  int n = model.tri.n;
  int r = flavor == Flavor::affine ? n + 1 : n;
  // Corner coordinates in the frame.
  std::vector<std::vector<Rat>> corner_x;
  for (const auto& c : cell.corners) corner_x.push_back(frame_coords(model, cell, c));
  // All sorted r-tuples of star vertices.
  std::vector<int> tuple(r);
  std::function<bool(int, int)> scan = [&](int pos, int start) {
    if (pos == r) {
      int sign = 0;
      for (const auto& x : corner_x) {
        int s = chart_minor_sign(model, cell, flavor, tuple, x);
        if (s == 0) continue;
        if (sign == 0)
          sign = s;
        else if (sign != s)
          return false;
      }
      return true;
    }
    for (int i = start; i < (int)star.size(); ++i) {
      tuple[pos] = star[i];
      if (!scan(pos + 1, i + 1)) return false;
    }
    return true;
  };
  if (!scan(0, 0)) return false;

  BaryPoint bp = cell_barycenter(cell);
  OrientedMatroid at_bary = chart_at(model, flavor, bp);
  for (const auto& w : interior_samples(cell, 5)) {
    BaryPoint p{cell.carrier, w};
    OrientedMatroid at_p = chart_at(model, flavor, p);
    if (!(at_p == at_bary)) return false;
  }
  if (chart_out) *chart_out = std::move(at_bary);
  return true;
}

// closure(a) inside closure(b): carrier containment plus exact barycentric
// membership of each corner of a in the simplex spanned by b's corners.
bool cell_leq(const CDCell& a, const CDCell& b) {
  if (a.dim > b.dim) return false;
  if (!std::includes(b.carrier.begin(), b.carrier.end(), a.carrier.begin(), a.carrier.end()))
    return false;
  // Express a's corners as weights over b's carrier.
  std::map<int, int> pos;
  for (std::size_t i = 0; i < b.carrier.size(); ++i) pos[b.carrier[i]] = (int)i;
  for (const auto& ca : a.corners) {
    std::vector<Rat> target(b.carrier.size(), Rat(0));
    for (std::size_t i = 0; i < a.carrier.size(); ++i) target[pos.at(a.carrier[i])] = ca[i];
    // Solve sum_j mu_j corner_b_j = target, sum mu = 1, mu >= 0.
    QMat sys(b.carrier.size() + 1, b.corners.size());
    std::vector<Rat> rhs(b.carrier.size() + 1, Rat(0));
    for (std::size_t j = 0; j < b.corners.size(); ++j) {
      for (std::size_t i = 0; i < b.carrier.size(); ++i) sys(i, j) = b.corners[j][i];
      sys(b.carrier.size(), j) = 1;
    }
    for (std::size_t i = 0; i < b.carrier.size(); ++i) rhs[i] = target[i];
    rhs[b.carrier.size()] = 1;
    auto mu = solve(sys, rhs);
    if (!mu) return false;
    for (const auto& v : *mu)
      if (v < 0) return false;
  }
  return true;
}

std::vector<CDCell> base_cells(const Triangulation& x) {
  std::vector<CDCell> cells;
  for (int k = 0; k <= x.cx.dim(); ++k)
    for (int i = 0; i < x.cx.count(k); ++i) {
      auto s = x.cx.simplex(k, i);
      CDCell c;
      c.dim = k;
      c.carrier.assign(s.begin(), s.end());
      for (int j = 0; j <= k; ++j) {
        std::vector<Rat> w(k + 1, Rat(0));
        w[j] = 1;
        c.corners.push_back(std::move(w));
      }
      cells.push_back(std::move(c));
    }
  return cells;
}

void halve_segment(const CDCell& seg, std::vector<CDCell>& out) {
  std::vector<Rat> mid(seg.carrier.size());
  for (std::size_t i = 0; i < mid.size(); ++i)
    mid[i] = (seg.corners[0][i] + seg.corners[1][i]) / 2;
  CDCell m;
  m.dim = 0;
  m.carrier = seg.carrier;
  m.corners = {mid};
  CDCell h1 = seg, h2 = seg;
  h1.corners = {seg.corners[0], mid};
  h2.corners = {mid, seg.corners[1]};
  out.push_back(std::move(m));
  out.push_back(std::move(h1));
  out.push_back(std::move(h2));
}

// Barycentric subdivision of a simplex cell: one subcell per flag of faces.
void bary_cell(const CDCell& cell, std::vector<CDCell>& out) {
  int k = cell.dim;
  std::vector<int> perm(k + 1);
  for (int i = 0; i <= k; ++i) perm[i] = i;
  do {
    CDCell sub;
    sub.dim = k;
    sub.carrier = cell.carrier;
    std::vector<Rat> acc(cell.carrier.size(), Rat(0));
    std::vector<std::vector<Rat>> corners;
    for (int i = 0; i <= k; ++i) {
      for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += cell.corners[perm[i]][d];
      std::vector<Rat> avg = acc;
      for (auto& v : avg) v /= (i + 1);
      corners.push_back(std::move(avg));
    }
    sub.corners = std::move(corners);
    out.push_back(std::move(sub));
    // Also emit all faces of the subcell (prefixes); dedupe happens later.
    for (int i = 0; i < k; ++i) {
      CDCell face;
      face.dim = i;
      face.carrier = cell.carrier;
      face.corners.assign(out.back().corners.begin(), out.back().corners.begin() + i + 1);
      out.push_back(std::move(face));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Interior points of lower-dimensional bary pieces have smaller carriers;
// re-derive the carrier of a cell from its corners (vertices with positive
// weight somewhere).
void shrink_carrier(CDCell& c) {
  std::vector<int> keep;
  std::vector<char> used(c.carrier.size(), 0);
  for (const auto& corner : c.corners)
    for (std::size_t i = 0; i < corner.size(); ++i)
      if (corner[i] != 0) used[i] = 1;
  std::vector<std::vector<Rat>> new_corners(c.corners.size());
  for (std::size_t i = 0; i < c.carrier.size(); ++i) {
    if (!used[i]) continue;
    keep.push_back(c.carrier[i]);
    for (std::size_t j = 0; j < c.corners.size(); ++j)
      new_corners[j].push_back(c.corners[j][i]);
  }
  c.carrier = keep;
  c.corners = new_corners;
}

}  // namespace

BaryPoint cell_barycenter(const CDCell& c) {
  BaryPoint p;
  p.carrier = c.carrier;
  p.weights.assign(c.carrier.size(), Rat(0));
  for (const auto& corner : c.corners)
    for (std::size_t i = 0; i < p.weights.size(); ++i) p.weights[i] += corner[i];
  for (auto& w : p.weights) w /= (long)c.corners.size();
  return p;
}

CDManifold build_cd(const Model& model, Flavor flavor, int refine_cap) {
  CDManifold cd;
  cd.model = &model;
  cd.flavor = flavor;
  std::vector<CDCell> cells = base_cells(model.tri);

  for (int depth = 0;; ++depth) {
    // Dedupe and sort canonically.
    std::map<CellKey, CDCell> uniq;
    for (auto& c : cells) {
      shrink_carrier(c);
      uniq.emplace(key_of(c), c);
    }
    cells.clear();
    for (auto& [k, c] : uniq) cells.push_back(std::move(c));

    std::vector<int> failing;
    std::vector<OrientedMatroid> charts(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!cell_constant(model, flavor, cells[i], &charts[i])) failing.push_back((int)i);

    if (failing.empty()) {
      cd.cells = std::move(cells);
      cd.charts = std::move(charts);
      cd.refine_depth = depth;
      break;
    }
    if (depth == refine_cap)
      throw structure_error("build_cd: constancy not certified at refinement depth " +
                            std::to_string(depth) + " (" + std::to_string(failing.size()) +
                            " cells open)");

    bool only_edges = true;
    for (int i : failing)
      if (cells[i].dim != 1) only_edges = false;
    std::vector<CDCell> next;
    if (only_edges) {
      std::set<int> bad(failing.begin(), failing.end());
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (bad.count((int)i))
          halve_segment(cells[i], next);
        else
          next.push_back(cells[i]);
      }
    } else {
      for (const auto& c : cells) {
        if (c.dim == 0)
          next.push_back(c);
        else
          bary_cell(c, next);
      }
    }
    cells = std::move(next);
  }

  cd.star_masks.resize(cd.cells.size());
  cd.arrs.resize(cd.cells.size());
  for (std::size_t i = 0; i < cd.cells.size(); ++i) {
    cd.star_masks[i] = star_mask(model.tri, cd.cells[i].carrier);
    VectorArrangement arr = flatten_at(model, cell_barycenter(cd.cells[i]));
    if (flavor == Flavor::affine)
      for (std::size_t e = 0; e < arr.columns.size(); ++e)
        arr.columns[e].push_back(cd.star_masks[i] >> e & 1 ? Rat(1) : Rat(0));
    cd.arrs[i] = std::move(arr);
  }

  int nc = (int)cd.cells.size();
  cd.leq.assign(nc, std::vector<char>(nc, 0));
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b)
      cd.leq[a][b] = (a == b) || cell_leq(cd.cells[a], cd.cells[b]);
  return cd;
}

ChartReport cd_weak_map_audit(const CDManifold& cd) {
  ChartReport rep;
  int nc = cd.cell_count();
  for (int a = 0; a < nc; ++a) {
    for (int b = 0; b < nc; ++b) {
      if (a == b || !cd.leq[a][b]) continue;
      // Cell a lies in the closure of b: the restriction of a's chart to the
      // nonloops of b's chart must be a weak map image of b's chart.
      OrientedMatroid restricted = restrict_to(cd.charts[a], cd.charts[b].nonloop_mask());
      if (!weak_map(cd.charts[b], restricted))
        rep.fail("weak map fails for cells " + std::to_string(a) + " <= " + std::to_string(b));
    }
  }
  return rep;
}
}  // namespace pontcalc
