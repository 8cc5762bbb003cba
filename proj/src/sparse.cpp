#include "pontcalc/sparse.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <queue>

#include "pontcalc/parallel.hpp"

namespace pontcalc {

void SparseMat::finalize() {
  for (auto& r : row) {
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rat>> merged;
    for (auto& e : r) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    r = std::move(merged);
  }
}

std::size_t SparseMat::nnz() const {
  std::size_t s = 0;
  for (const auto& r : row) s += r.size();
  return s;
}

namespace {

const Rat* row_entry(const std::vector<std::pair<int, Rat>>& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

// row_j -= f * row_p (sorted merge).
void axpy_row(std::vector<std::pair<int, Rat>>& rj, const Rat& f,
              const std::vector<std::pair<int, Rat>>& rp) {
  std::vector<std::pair<int, Rat>> out;
  out.reserve(rj.size() + rp.size());
  std::size_t i = 0, k = 0;
  while (i < rj.size() || k < rp.size()) {
    if (k == rp.size() || (i < rj.size() && rj[i].first < rp[k].first)) {
      out.push_back(std::move(rj[i++]));
    } else if (i == rj.size() || rp[k].first < rj[i].first) {
      out.push_back({rp[k].first, -f * rp[k].second});
      ++k;
    } else {
      Rat v = rj[i].second - f * rp[k].second;
      if (v != 0) out.push_back({rj[i].first, std::move(v)});
      ++i;
      ++k;
    }
  }
  rj = std::move(out);
}

struct EliminationResult {
  std::vector<int> pivot_row;   // in pivot order
  std::vector<int> pivot_col;   // in pivot order
  bool consistent = true;       // only meaningful with rhs
};

// Shared elimination core.  When rhs is null only the rank is of interest.
// Pivot rows come off a lazy-deletion min-heap keyed by (nnz, row index), so
// each step is near-linear in the touched rows; within the pivot row the
// column minimizes column count with unit-entry preference.
EliminationResult eliminate(SparseMat& a, std::vector<Rat>* rhs, bool parallel) {
  EliminationResult res;
  std::vector<char> row_done(a.rows, 0);
  std::vector<int> col_count(a.cols, 0);
  for (const auto& r : a.row)
    for (const auto& [c, v] : r) ++col_count[c];

  using Key = std::pair<std::size_t, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
  for (int i = 0; i < a.rows; ++i)
    if (!a.row[i].empty()) heap.push({a.row[i].size(), i});

  for (;;) {
    int p = -1;
    while (!heap.empty()) {
      auto [nnz, i] = heap.top();
      heap.pop();
      if (row_done[i] || a.row[i].empty() || a.row[i].size() != nnz) continue;
      p = i;
      break;
    }
    if (p < 0) break;

    int pc = -1;
    bool best_unit = false;
    int best_count = 0;
    for (const auto& [c, v] : a.row[p]) {
      bool unit = numerator(v) == 1 || numerator(v) == -1;
      if (pc < 0 || std::make_pair(!unit, col_count[c]) <
                        std::make_pair(!best_unit, best_count)) {
        pc = c;
        best_unit = unit;
        best_count = col_count[c];
      }
    }
    row_done[p] = 1;
    res.pivot_row.push_back(p);
    res.pivot_col.push_back(pc);
    const Rat pv = *row_entry(a.row[p], pc);

    std::vector<int> targets;
    for (int i = 0; i < a.rows; ++i) {
      if (row_done[i] || a.row[i].empty()) continue;
      if (row_entry(a.row[i], pc)) targets.push_back(i);
    }
    std::vector<Rat> factors(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t)
      factors[t] = *row_entry(a.row[targets[t]], pc) / pv;

    auto update = [&](std::size_t t) {
      int i = targets[t];
      for (const auto& [c, v] : a.row[i]) {
#pragma omp atomic
        --col_count[c];
      }
      axpy_row(a.row[i], factors[t], a.row[p]);
      for (const auto& [c, v] : a.row[i]) {
#pragma omp atomic
        ++col_count[c];
      }
    };
    if (parallel && targets.size() > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
      for (std::size_t t = 0; t < targets.size(); ++t) update(t);
    } else {
      for (std::size_t t = 0; t < targets.size(); ++t) update(t);
    }
    if (rhs) {
      for (std::size_t t = 0; t < targets.size(); ++t)
        (*rhs)[targets[t]] -= factors[t] * (*rhs)[p];
    }
    for (const auto& [c, v] : a.row[p]) --col_count[c];
    for (int i : targets)
      if (!a.row[i].empty()) heap.push({a.row[i].size(), i});
  }

  if (rhs) {
    for (int i = 0; i < a.rows; ++i)
      if (!row_done[i] && a.row[i].empty() && (*rhs)[i] != 0) res.consistent = false;
  }
  return res;
}

std::optional<std::vector<Rat>> solve_impl(SparseMat a, std::vector<Rat> b, bool parallel) {
  if ((int)b.size() != a.rows) throw input_error("sparse_solve: rhs size mismatch");
  a.finalize();
  auto res = eliminate(a, &b, parallel);
  if (!res.consistent) return std::nullopt;
  // Back substitution in reverse pivot order; free variables zero.
  std::vector<Rat> x(a.cols);
  for (int t = (int)res.pivot_row.size() - 1; t >= 0; --t) {
    int r = res.pivot_row[t], c = res.pivot_col[t];
    Rat acc = b[r];
    Rat diag = 0;
    for (const auto& [cc, v] : a.row[r]) {
      if (cc == c)
        diag = v;
      else if (x[cc] != 0)
        acc -= v * x[cc];
    }
    x[c] = acc / diag;
  }
  return x;
}

int rank_impl(SparseMat a, bool parallel) {
  a.finalize();
  auto res = eliminate(a, nullptr, parallel);
  return (int)res.pivot_row.size();
}

}  // namespace

std::optional<std::vector<Rat>> sparse_solve(SparseMat a, std::vector<Rat> b) {
  return solve_impl(std::move(a), std::move(b), true);
}
std::optional<std::vector<Rat>> sparse_solve_serial(SparseMat a, std::vector<Rat> b) {
  return solve_impl(std::move(a), std::move(b), false);
}
int sparse_rank(SparseMat a) { return rank_impl(std::move(a), true); }
int sparse_rank_serial(SparseMat a) { return rank_impl(std::move(a), false); }

}  // namespace pontcalc
