#include "pontcalc/oriented_matroid.hpp"

#include <algorithm>
#include <unordered_set>

namespace pontcalc {

std::uint64_t OrientedMatroid::nonloop_mask() const {
  std::uint64_t m = 0;
  for (const auto& v : covectors) m |= v.support();
  return m;
}

int covector_poset_rank(const std::vector<SignVec>& covectors) {
  // Height of the domination poset.  Sort by support size; chains ascend it.
  std::vector<const SignVec*> order;
  for (const auto& v : covectors)
    if (!v.is_zero()) order.push_back(&v);
  std::stable_sort(order.begin(), order.end(), [](const SignVec* a, const SignVec* b) {
    return std::popcount(a->support()) < std::popcount(b->support());
  });
  std::vector<int> height(order.size(), 1);
  int best = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (order[i]->support() != order[j]->support() && order[i]->dominates(*order[j]))
        height[i] = std::max(height[i], height[j] + 1);
    }
    best = std::max(best, height[i]);
  }
  return best;
}

bool covector_axioms_ok(const OrientedMatroid& m) {
  const auto& vs = m.covectors;
  SignVec zero(m.n);
  if (std::find(vs.begin(), vs.end(), zero) == vs.end()) return false;
  std::unordered_set<SignVec, SignVecHash> set(vs.begin(), vs.end());
  for (const auto& x : vs)
    if (!set.count(-x)) return false;
  for (const auto& x : vs)
    for (const auto& y : vs)
      if (!set.count(compose(x, y))) return false;
  // Elimination: for x,y and e with x(e) = -y(e) != 0 there is z in V* with
  // z(e) = 0 agreeing with x o y and y o x where those agree.
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      std::uint64_t disagree = (x.pos & y.neg) | (x.neg & y.pos);
      if (disagree == 0) continue;
      if (x == -y) continue;
      for (int e = 0; e < m.n; ++e) {
        if (!(disagree >> e & 1)) continue;
        bool found = false;
        for (const auto& z : vs) {
          if (z.at(e) != 0) continue;
          bool ok = true;
          for (int f = 0; f < m.n && ok; ++f) {
            int xf = x.at(f), yf = y.at(f);
            if (xf == 0 && yf == 0) {
              if (z.at(f) != 0) ok = false;
            } else if ((xf >= 0 && yf >= 0) && (xf > 0 || yf > 0)) {
              if (z.at(f) != 1) ok = false;
            } else if ((xf <= 0 && yf <= 0) && (xf < 0 || yf < 0)) {
              if (z.at(f) != -1) ok = false;
            }
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  if (covector_poset_rank(vs) != m.rank) return false;
  return true;
}

namespace {

Rat minor_det(const VectorArrangement& arr, const std::vector<int>& cols) {
  std::size_t r = cols.size();
  QMat m(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = arr.columns[cols[j]][i];
  return det(m);
}

}  // namespace

int arrangement_rank(const VectorArrangement& arr) {
  if (arr.size() == 0) return 0;
  QMat m(arr.dim(), arr.size());
  for (std::size_t j = 0; j < arr.size(); ++j)
    for (std::size_t i = 0; i < arr.dim(); ++i) m(i, j) = arr.columns[j][i];
  return (int)rank(std::move(m));
}

OrientedMatroid om_from_vectors(const VectorArrangement& arr, int r) {
  if (r < 1) throw rank_error("om_from_vectors: rank must be positive");
  for (const auto& c : arr.columns)
    if (c.size() != arr.dim()) throw input_error("om_from_vectors: ragged arrangement");
  if ((std::size_t)r > arr.dim())
    throw rank_error("om_from_vectors: declared rank exceeds ambient dimension");
  if (arrangement_rank(arr) != r)
    throw rank_error("om_from_vectors: arrangement does not span declared rank");
  if (arr.size() > 64) throw input_error("om_from_vectors: ground set too large");

  std::uint8_t n = (std::uint8_t)arr.size();

  // If the ambient dimension exceeds r, re-express in a basis of the span so
  // that r x r minors are defined.
  VectorArrangement work = arr;
  if (arr.dim() > (std::size_t)r) {
    QMat m(arr.dim(), arr.size());
    for (std::size_t j = 0; j < arr.size(); ++j)
      for (std::size_t i = 0; i < arr.dim(); ++i) m(i, j) = arr.columns[j][i];
    // Pick r independent rows by elimination on the transpose.
    QMat t(arr.size(), arr.dim());
    for (std::size_t i = 0; i < arr.dim(); ++i)
      for (std::size_t j = 0; j < arr.size(); ++j) t(j, i) = m(i, j);
    std::vector<std::size_t> rows;
    {
      QMat e = t;
      std::size_t rr = 0;
      for (std::size_t col = 0; col < e.cols() && rr < e.rows(); ++col) {
        std::size_t piv = rr;
        while (piv < e.rows() && e(piv, col) == 0) ++piv;
        if (piv == e.rows()) continue;
        for (std::size_t j = 0; j < e.cols(); ++j) std::swap(e(piv, j), e(rr, j));
        for (std::size_t i2 = rr + 1; i2 < e.rows(); ++i2) {
          if (e(i2, col) == 0) continue;
          Rat f = e(i2, col) / e(rr, col);
          for (std::size_t j = col; j < e.cols(); ++j) e(i2, j) -= f * e(rr, j);
        }
        rows.push_back(col);
        ++rr;
      }
    }
    work.columns.assign(arr.size(), std::vector<Rat>(r));
    for (std::size_t j = 0; j < arr.size(); ++j)
      for (int i = 0; i < r; ++i) work.columns[j][i] = arr.columns[j][rows[i]];
    if (arrangement_rank(work) != r)
      throw rank_error("om_from_vectors: row selection lost rank");
  }

  Chirotope chi = Chirotope::from_sorted_values(n, (std::uint8_t)r, [&](const std::vector<int>& t) {
    return sgn(minor_det(work, t));
  });

  OrientedMatroid om;
  om.n = n;
  om.rank = (std::uint8_t)r;
  om.chi = chi;
  om.covectors = covectors_from_chirotope(chi);
  return om;
}

OrientedMatroid om_from_chirotope(const Chirotope& chi) {
  OrientedMatroid om;
  om.n = chi.n;
  om.rank = chi.r;
  om.chi = chi;
  om.covectors = covectors_from_chirotope(chi);
  return om;
}

std::vector<int> loops(const OrientedMatroid& m) {
  std::vector<int> out;
  std::uint64_t nl = m.nonloop_mask();
  for (int e = 0; e < m.n; ++e)
    if (!(nl >> e & 1)) out.push_back(e);
  return out;
}

bool is_independent(const OrientedMatroid& m, const std::vector<int>& subset) {
  return subset_rank(m, subset) == (int)subset.size();
}

int subset_rank(const OrientedMatroid& m, const std::vector<int>& subset) {
  for (int e : subset)
    if (e < 0 || e >= m.n) throw input_error("subset_rank: element outside ground set");
  if (!m.chi) throw input_error("subset_rank: no chirotope available");
  // Greedy matroid rank via the chirotope's independence oracle.
  std::vector<int> indep;
  for (int e : subset) {
    std::vector<int> cand = indep;
    cand.push_back(e);
    // cand independent iff extendable to a basis with nonzero chirotope value.
    if ((int)cand.size() > m.rank) continue;
    std::vector<int> t = cand;
    bool ok = false;
    std::function<void(int)> extend = [&](int start) {
      if (ok) return;
      if ((int)t.size() == m.rank) {
        if (m.chi->value(t) != 0) ok = true;
        return;
      }
      for (int f = start; f < m.n; ++f) {
        t.push_back(f);
        extend(f + 1);
        t.pop_back();
        if (ok) return;
      }
    };
    extend(0);
    if (ok) indep = cand;
  }
  return (int)indep.size();
}

bool in_convex_hull(const OrientedMatroid& m, int e, const std::vector<int>& a) {
  if (e < 0 || e >= m.n) throw input_error("in_convex_hull: element outside ground set");
  for (int x : a)
    if (x < 0 || x >= m.n) throw input_error("in_convex_hull: element outside ground set");
  // Literal universal quantifier.  For A empty the zero covector is positive
  // on A and never positive on e, so conv(emptyset) is empty.
  for (const auto& v : m.covectors) {
    bool pos_on_a = true;
    for (int x : a)
      if (v.at(x) != 1) {
        pos_on_a = false;
        break;
      }
    if (pos_on_a && v.at(e) != 1) return false;
  }
  return true;
}

bool weak_map(const OrientedMatroid& m, const OrientedMatroid& n_) {
  if (m.n != n_.n) throw input_error("weak_map: ground set mismatch");
  for (const auto& y : n_.covectors) {
    bool dominated = false;
    for (const auto& x : m.covectors)
      if (x.dominates(y)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool weak_map_chirotope(const OrientedMatroid& m, const OrientedMatroid& n_) {
  if (m.n != n_.n) throw input_error("weak_map: ground set mismatch");
  if (!m.chi || !n_.chi || m.chi->r != n_.chi->r) return false;
  for (int s : {1, -1}) {
    bool ok = true;
    for (std::size_t i = 0; i < m.chi->vals.size() && ok; ++i) {
      int a = m.chi->vals[i], b = s * n_.chi->vals[i];
      if (b != 0 && b != a) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool strong_map_image(const OrientedMatroid& m, const OrientedMatroid& n_) {
  if (m.n != n_.n) throw input_error("strong_map_image: ground set mismatch");
  std::unordered_set<SignVec, SignVecHash> set(m.covectors.begin(), m.covectors.end());
  for (const auto& v : n_.covectors)
    if (!set.count(v)) return false;
  return true;
}

OrientedMatroid restrict_to(const OrientedMatroid& m, std::uint64_t mask) {
  OrientedMatroid r;
  r.n = m.n;
  std::unordered_set<SignVec, SignVecHash> seen;
  for (const auto& v : m.covectors) seen.insert(v.restricted(mask));
  r.covectors.assign(seen.begin(), seen.end());
  std::sort(r.covectors.begin(), r.covectors.end());
  r.rank = (std::uint8_t)covector_poset_rank(r.covectors);
  return r;
}

}  // namespace pontcalc
