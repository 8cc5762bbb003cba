#ifndef PONTCALC_MATRIX_HPP
#define PONTCALC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pontcalc/rational.hpp"

namespace pontcalc {

// Dense exact-rational matrix.  Sizes in this project are tiny (chart ranks,
// per-edge constraint systems), so a plain row-major vector is enough.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static QMat identity(std::size_t n);

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

Rat det(const QMat& m);

// Rank via Gaussian elimination.
std::size_t rank(QMat m);

// Solves A x = b.  Returns nullopt when inconsistent.  When the system is
// underdetermined, free variables are set to zero (deterministic pivoting:
// first nonzero entry scanning rows top-down).
std::optional<std::vector<Rat>> solve(QMat a, std::vector<Rat> b);

// Basis of the right nullspace of A.
std::vector<std::vector<Rat>> nullspace(QMat a);

// Minimum-norm solution of A x = b: the unique x with Ax = b minimizing
// sum x_i^2, via the bordered KKT system  [I A^T; A 0] [x; lambda] = [0; b]
// with deterministic pivoting.  Returns nullopt when Ax = b is inconsistent.
std::optional<std::vector<Rat>> min_norm_solve(const QMat& a, const std::vector<Rat>& b);

// Independent route for the same problem, used as a test oracle: particular
// solution + dense nullspace basis N, then solve the normal equations
// (N^T N) t = -N^T x0.
std::optional<std::vector<Rat>> min_norm_solve_dense_oracle(const QMat& a,
                                                            const std::vector<Rat>& b);

}  // namespace pontcalc

#endif
