#include "pontcalc/matrix.hpp"

#include <cassert>

namespace pontcalc {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rat det(const QMat& m) {
  assert(m.rows() == m.cols());
  QMat a = m;
  std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

namespace {

// Row echelon; returns pivot columns.  Operates on an augmented matrix when
// rhs != nullptr.
std::vector<std::size_t> echelon(QMat& a, std::vector<Rat>* rhs) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
      if (rhs) std::swap((*rhs)[piv], (*rhs)[r]);
    }
    Rat inv = Rat(1) / a(r, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMat m) { return echelon(m, nullptr).size(); }

std::optional<std::vector<Rat>> solve(QMat a, std::vector<Rat> b) {
  assert(a.rows() == b.size());
  auto pivots = echelon(a, &b);
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::vector<std::vector<Rat>> nullspace(QMat a) {
  auto pivots = echelon(a, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> min_norm_solve(const QMat& a, const std::vector<Rat>& b) {
  std::size_t n = a.cols(), m = a.rows();
  QMat k(n + m, n + m);
  std::vector<Rat> rhs(n + m);
  for (std::size_t i = 0; i < n; ++i) k(i, i) = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k(j, n + i) = a(i, j);
      k(n + i, j) = a(i, j);
    }
  for (std::size_t i = 0; i < m; ++i) rhs[n + i] = b[i];
  auto sol = solve(std::move(k), std::move(rhs));
  if (!sol) return std::nullopt;
  // The KKT system is solvable iff Ax=b is; the x block is the minimizer.
  std::vector<Rat> x(sol->begin(), sol->begin() + n);
  for (std::size_t i = 0; i < m; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
    if (acc != b[i]) return std::nullopt;
  }
  return x;
}

std::optional<std::vector<Rat>> min_norm_solve_dense_oracle(const QMat& a,
                                                            const std::vector<Rat>& b) {
  auto x0 = solve(a, b);
  if (!x0) return std::nullopt;
  auto ns = nullspace(a);
  if (ns.empty()) return x0;
  std::size_t k = ns.size(), n = a.cols();
  QMat g(k, k);
  std::vector<Rat> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rat acc = 0;
      for (std::size_t t = 0; t < n; ++t) acc += ns[i][t] * ns[j][t];
      g(i, j) = acc;
    }
    Rat acc = 0;
    for (std::size_t t = 0; t < n; ++t) acc += ns[i][t] * (*x0)[t];
    rhs[i] = -acc;
  }
  auto t = solve(std::move(g), std::move(rhs));
  // N^T N is positive definite on the span, always solvable.
  std::vector<Rat> x = *x0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] += (*t)[i] * ns[i][j];
  return x;
}

}  // namespace pontcalc
