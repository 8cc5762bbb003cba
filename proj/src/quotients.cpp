#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include "pontcalc/oriented_matroid.hpp"

namespace pontcalc {

namespace {

using Vec3 = std::array<Rat, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Scales to a primitive integer vector by a positive factor (sign kept).
Vec3 primitive_signed(const Vec3& v) {
  Int lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  Int g = 0;
  std::array<Int, 3> w;
  for (int i = 0; i < 3; ++i) {
    w[i] = numerator(v[i] * Rat(lcm_den));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) return {Rat(0), Rat(0), Rat(0)};
  if (g < 0) g = -g;
  return {Rat(w[0] / g), Rat(w[1] / g), Rat(w[2] / g)};
}

// As above but with positive leading entry, so antipodal directions compare
// equal; used for circle normals.
Vec3 primitive(const Vec3& v) {
  Vec3 w = primitive_signed(v);
  int lead = 0;
  while (lead < 3 && w[lead] == 0) ++lead;
  if (lead < 3 && w[lead] < 0)
    for (auto& x : w) x = -x;
  return w;
}

Vec3 negate(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Candidate projection direction; eps is a first-order symbolic perturbation
// off a circle (zero when the candidate is an exact rational point).
struct Direction {
  Vec3 base;
  Vec3 eps{Rat(0), Rat(0), Rat(0)};
};

int sign_det_dir(const Vec3& ve, const Vec3& vf, const Direction& d) {
  int s = sgn(det3(ve, vf, d.base));
  if (s != 0) return s;
  return sgn(det3(ve, vf, d.eps));
}

// Exact counterclockwise comparison of points in the plane (coordinates
// relative to an orthogonal-ish basis); angle in [0, 2pi).
int quadrant(const Rat& x, const Rat& y) {
  if (sgn(y) > 0 || (sgn(y) == 0 && sgn(x) > 0)) return 0;  // [0, pi)
  return 1;                                                 // [pi, 2pi)
}

bool angle_less(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
  int qa = quadrant(a.first, a.second), qb = quadrant(b.first, b.second);
  if (qa != qb) return qa < qb;
  Rat cr = a.first * b.second - a.second * b.first;
  return sgn(cr) > 0;
}

VectorArrangement to_rank3_basis(const VectorArrangement& arr) {
  if (arr.dim() == 3) return arr;
  // Select 3 independent coordinate rows by elimination on the transpose.
  QMat t(arr.size(), arr.dim());
  for (std::size_t i = 0; i < arr.dim(); ++i)
    for (std::size_t j = 0; j < arr.size(); ++j) t(j, i) = arr.columns[j][i];
  std::vector<std::size_t> rows;
  std::size_t rr = 0;
  for (std::size_t col = 0; col < t.cols() && rr < t.rows(); ++col) {
    std::size_t piv = rr;
    while (piv < t.rows() && t(piv, col) == 0) ++piv;
    if (piv == t.rows()) continue;
    for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(piv, j), t(rr, j));
    for (std::size_t i2 = rr + 1; i2 < t.rows(); ++i2) {
      if (t(i2, col) == 0) continue;
      Rat f = t(i2, col) / t(rr, col);
      for (std::size_t j = col; j < t.cols(); ++j) t(i2, j) -= f * t(rr, j);
    }
    rows.push_back(col);
    ++rr;
  }
  VectorArrangement out;
  out.columns.assign(arr.size(), std::vector<Rat>(3));
  for (std::size_t j = 0; j < arr.size(); ++j)
    for (int i = 0; i < 3; ++i) out.columns[j][i] = arr.columns[j][rows[i]];
  return out;
}

struct Vec3Less {
  bool operator()(const Vec3& a, const Vec3& b) const {
    for (int i = 0; i < 3; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

}  // namespace

OrientedMatroid rank2_projection(const VectorArrangement& arr, const std::vector<Rat>& p,
                                 const std::vector<Rat>& q) {
  std::uint8_t n = (std::uint8_t)arr.size();
  std::vector<Rat> pe(n), qe(n);
  for (int e = 0; e < n; ++e) {
    Rat a = 0, b = 0;
    for (std::size_t i = 0; i < arr.dim(); ++i) {
      a += p[i] * arr.columns[e][i];
      b += q[i] * arr.columns[e][i];
    }
    pe[e] = a;
    qe[e] = b;
  }
  Chirotope chi = Chirotope::from_sorted_values(n, 2, [&](const std::vector<int>& t) {
    return sgn(pe[t[0]] * qe[t[1]] - pe[t[1]] * qe[t[0]]);
  });
  bool nonzero = false;
  for (auto v : chi.vals)
    if (v != 0) nonzero = true;
  if (!nonzero) throw rank_error("rank2_projection: projected arrangement has rank < 2");
  return om_from_chirotope(chi);
}

std::vector<OrientedMatroid> rank2_quotients_of_rank3(const VectorArrangement& arr) {
  if (arrangement_rank(arr) != 3)
    throw rank_error("rank2_quotients_of_rank3: arrangement rank is not 3");
  VectorArrangement a3 = to_rank3_basis(arr);
  std::uint8_t n = (std::uint8_t)a3.size();
  std::vector<Vec3> cols(n);
  for (int e = 0; e < n; ++e) cols[e] = {a3.columns[e][0], a3.columns[e][1], a3.columns[e][2]};

  // Great circles: one per plane spanned by an independent pair.
  std::vector<Vec3> normals;
  {
    std::set<Vec3, Vec3Less> seen;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec3 c = cross(cols[i], cols[j]);
        if (is_zero(c)) continue;
        Vec3 pc = primitive(c);
        if (seen.insert(pc).second) normals.push_back(pc);
      }
  }
  if (normals.size() < 2)
    throw structure_error("rank2_quotients_of_rank3: degenerate circle arrangement");

  // Arrangement vertices: pairwise circle intersections, both signs.
  std::vector<Vec3> vertices;
  {
    std::set<Vec3, Vec3Less> seen;
    for (std::size_t k = 0; k < normals.size(); ++k)
      for (std::size_t l = k + 1; l < normals.size(); ++l) {
        Vec3 d = cross(normals[k], normals[l]);
        if (is_zero(d)) continue;
        for (const Vec3& v : {primitive_signed(d), primitive_signed(negate(d))})
          if (seen.insert(v).second) vertices.push_back(v);
      }
  }

  std::vector<Direction> candidates;
  for (const auto& v : vertices) candidates.push_back({v, {Rat(0), Rat(0), Rat(0)}});

  // Edge representatives per circle, plus the two adjacent face points.
  for (const auto& nk : normals) {
    std::vector<Vec3> on_circle;
    for (const auto& v : vertices)
      if (dot(v, nk) == 0) on_circle.push_back(v);
    if (on_circle.size() < 2) continue;
    // Angular order in the plane nk-perp.
    Vec3 u = (nk[0] != 0 || nk[1] != 0) ? Vec3{-nk[1], nk[0], Rat(0)} : Vec3{Rat(1), Rat(0), Rat(0)};
    Vec3 w = cross(nk, u);
    std::vector<std::pair<std::pair<Rat, Rat>, Vec3>> pts;
    for (const auto& v : on_circle) pts.push_back({{dot(v, u), dot(v, w)}, v});
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec3& p = pts[i].second;
      const Vec3& q = pts[(i + 1) % pts.size()].second;
      Vec3 mid = {p[0] + q[0], p[1] + q[1], p[2] + q[2]};
      if (is_zero(mid)) mid = cross(nk, p);
      candidates.push_back({mid, {Rat(0), Rat(0), Rat(0)}});
      candidates.push_back({mid, nk});
      candidates.push_back({mid, negate(nk)});
    }
  }

  OrientedMatroid full = om_from_vectors(a3, 3);
  std::unordered_set<SignVec, SignVecHash> full_set(full.covectors.begin(), full.covectors.end());

  std::vector<OrientedMatroid> out;
  std::set<std::vector<SignVec>> seen_oms;
  for (const auto& cand : candidates) {
    Chirotope chi = Chirotope::from_sorted_values(n, 2, [&](const std::vector<int>& t) {
      return sign_det_dir(cols[t[0]], cols[t[1]], cand);
    });
    bool nonzero = false;
    for (auto v : chi.vals)
      if (v != 0) nonzero = true;
    if (!nonzero)
      throw structure_error("rank2_quotients_of_rank3: projection collapsed to rank < 2");
    OrientedMatroid q = om_from_chirotope(chi);
    if (!seen_oms.insert(q.covectors).second) continue;
    for (const auto& v : q.covectors)
      if (!full_set.count(v))
        throw structure_error("rank2_quotients_of_rank3: quotient not a strong map image");
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace pontcalc
