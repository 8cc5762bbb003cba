#ifndef PONTCALC_SPARSE_HPP
#define PONTCALC_SPARSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pontcalc/rational.hpp"

namespace pontcalc {

// Sparse rational matrix, rows as sorted (col, value) lists.
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> row;

  void init(int r, int c) {
    rows = r;
    cols = c;
    row.assign(r, {});
  }
  void push(int r, int c, Rat v) {
    if (v != 0) row[r].push_back({c, std::move(v)});
  }
  void finalize();  // sort each row by column, merge duplicates
  std::size_t nnz() const;
};

// Any solution of A x = b (free variables zero), or nullopt when
// inconsistent.  Deterministic Markowitz-style pivoting with unit-entry
// preference; row updates run under OpenMP, and the serial variant is the
// reference implementation kept for testing.
std::optional<std::vector<Rat>> sparse_solve(SparseMat a, std::vector<Rat> b);
std::optional<std::vector<Rat>> sparse_solve_serial(SparseMat a, std::vector<Rat> b);

int sparse_rank(SparseMat a);
int sparse_rank_serial(SparseMat a);

}  // namespace pontcalc

#endif
