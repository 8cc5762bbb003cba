#include "pontcalc/homology.hpp"

#include <vector>

#include "pontcalc/chain_ops.hpp"

namespace pontcalc {

SparseMat boundary_matrix(const OrderedComplex& cx, const SystemPtr& sys, int k) {
  SparseMat m;
  m.init(cx.count(k - 1), cx.count(k));
  if (k <= 0 || k > cx.dim()) return m;
  std::vector<int> face(k);
  for (int j = 0; j < cx.count(k); ++j) {
    auto s = cx.simplex(k, j);
    for (int i = 0; i <= k; ++i) {
      int t = 0;
      for (int l = 0; l <= k; ++l)
        if (l != i) face[t++] = s[l];
      int fi = cx.find(k - 1, face);
      if (fi < 0) throw structure_error("boundary_matrix: face missing");
      Rat v = (i % 2) ? -1 : 1;
      if (i == 0 && sys) v *= sys->sign(s[0], s[1]);
      m.push(fi, j, v);
    }
  }
  m.finalize();
  return m;
}

int betti(const OrderedComplex& cx, const SystemPtr& sys, int k) {
  int dim_k = cx.count(k);
  if (dim_k == 0) return 0;
  int rk = k >= 1 ? sparse_rank(boundary_matrix(cx, sys, k)) : 0;
  int rk1 = k + 1 <= cx.dim() ? sparse_rank(boundary_matrix(cx, sys, k + 1)) : 0;
  return dim_k - rk - rk1;
}

std::optional<Chain> boundary_witness(const Chain& c) {
  const OrderedComplex& cx = *c.cx;
  int k = c.deg + 1;
  if (k > cx.dim()) {
    if (c.is_zero()) {
      Chain zero;
      zero.cx = c.cx;
      zero.deg = k;
      zero.sys = c.sys;
      return zero;
    }
    return std::nullopt;
  }
  SparseMat m = boundary_matrix(cx, c.sys, k);
  std::vector<Rat> b(cx.count(c.deg));
  for (const auto& [i, v] : c.coef) b[i] = v;
  auto x = sparse_solve(std::move(m), std::move(b));
  if (!x) return std::nullopt;
  Chain w;
  w.cx = c.cx;
  w.deg = k;
  w.sys = c.sys;
  for (std::size_t i = 0; i < x->size(); ++i)
    if ((*x)[i] != 0) w.coef.emplace((int)i, (*x)[i]);
  return w;
}

bool homologous(const Chain& a, const Chain& b, Chain* witness) {
  Chain d = a - b;
  auto w = boundary_witness(d);
  if (!w) return false;
  if (witness) *witness = *w;
  return true;
}

std::optional<Cochain> coboundary_witness(const Cochain& target) {
  const OrderedComplex& cx = *target.cx;
  int k = target.deg;  // looking for psi of degree k-1
  if (k == 0) return target.is_zero() ? std::make_optional(Cochain{&cx, 0, target.sys, {}})
                                      : std::nullopt;
  // delta: C^{k-1} -> C^k is the transpose of boundary: C_k -> C_{k-1}.
  SparseMat bm = boundary_matrix(cx, target.sys, k);
  SparseMat d;
  d.init(bm.cols, bm.rows);
  for (int r = 0; r < bm.rows; ++r)
    for (const auto& [c, v] : bm.row[r]) d.push(c, r, v);
  d.finalize();
  std::vector<Rat> b(cx.count(k));
  for (const auto& [i, v] : target.coef) b[i] = v;
  auto x = sparse_solve(std::move(d), std::move(b));
  if (!x) return std::nullopt;
  Cochain psi;
  psi.cx = &cx;
  psi.deg = k - 1;
  psi.sys = target.sys;
  for (std::size_t i = 0; i < x->size(); ++i)
    if ((*x)[i] != 0) psi.coef.emplace((int)i, (*x)[i]);
  return psi;
}

}  // namespace pontcalc
