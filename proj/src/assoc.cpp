#include "pontcalc/assoc.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pontcalc/parallel.hpp"

namespace pontcalc {

namespace {

// Weak map as covector domination, without the rank precondition: the
// restriction targets are partial degenerations.
bool dominated_all(const OrientedMatroid& m, const std::vector<SignVec>& targets) {
  for (const auto& y : targets) {
    bool ok = false;
    for (const auto& x : m.covectors)
      if (x.dominates(y)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

std::vector<SignVec> restricted_covectors(const OrientedMatroid& m, std::uint64_t mask) {
  std::set<SignVec> out;
  for (const auto& v : m.covectors) out.insert(v.restricted(mask));
  return {out.begin(), out.end()};
}

// Deterministic sampled 2-planes for charts of rank >= 4: all coordinate
// pairs plus a small integer grid; non-exhaustive by construction.
std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> sampled_planes(std::size_t dim) {
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> out;
  auto unit = [&](std::size_t i) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) out.push_back({unit(i), unit(j)});
  const long grid[4][2] = {{1, 1}, {1, -1}, {2, 1}, {1, 2}};
  for (std::size_t i = 0; i + 1 < dim; ++i)
    for (const auto& g : grid) {
      std::vector<Rat> p(dim, Rat(0)), q(dim, Rat(0));
      p[i] = g[0];
      p[i + 1] = g[1];
      q[(i + 2) % dim] = 1;
      out.push_back({p, q});
    }
  return out;
}

}  // namespace

int AssocPosets::z_count() const {
  int total = 0;
  for (const auto& f : fiber) total += (int)f.size();
  return total;
}

ZElem AssocPosets::z_at(int idx) const {
  for (std::size_t e = 0; e < fiber.size(); ++e) {
    if (idx < (int)fiber[e].size()) return {(int)e, fiber[e][idx]};
    idx -= (int)fiber[e].size();
  }
  throw input_error("z_at: index out of range");
}

int AssocPosets::z_index(int yelem, const SignVec& z) const {
  int base = 0;
  for (int e = 0; e < yelem; ++e) base += (int)fiber[e].size();
  for (std::size_t i = 0; i < fiber[yelem].size(); ++i)
    if (fiber[yelem][i] == z) return base + (int)i;
  throw input_error("z_index: covector is not on the fiber circle");
}

bool assoc_order_y(const AssocPosets& a, int e1, int e2) {
  if (e1 == e2) return true;
  const auto& d1 = a.delta_of(e1);
  const auto& d2 = a.delta_of(e2);
  if (!std::includes(d2.begin(), d2.end(), d1.begin(), d1.end())) return false;
  std::uint64_t star2 = a.star_of(e2);
  if (!dominated_all(a.t_of(e2), restricted_covectors(a.t_of(e1), star2))) return false;
  if (!dominated_all(a.y_of(e2), restricted_covectors(a.y_of(e1), star2))) return false;
  return true;
}

bool assoc_order_z(const AssocPosets& a, const ZElem& z1, const ZElem& z2) {
  if (z1.yelem == z2.yelem) {
    return z2.z.dominates(z1.z);
  }
  if (!a.leq[z1.yelem][z2.yelem]) return false;
  return z2.z.dominates(z1.z.restricted(a.star_of(z2.yelem)));
}

AssocPosets build_restricted_yz(const CDManifold& cd) {
  AssocPosets a;
  a.cd = &cd;
  std::map<std::vector<SignVec>, int> pool;
  auto intern = [&](const OrientedMatroid& om) {
    auto it = pool.find(om.covectors);
    if (it != pool.end()) return it->second;
    int id = (int)a.oms.size();
    a.oms.push_back(om);
    pool.emplace(om.covectors, id);
    return id;
  };

  std::vector<std::vector<OrientedMatroid>> per_cell(cd.cell_count());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (int c = 0; c < cd.cell_count(); ++c) {
    const OrientedMatroid& t = cd.charts[c];
    std::vector<OrientedMatroid> ys;
    if (t.rank == 2) {
      ys.push_back(t);
    } else if (t.rank == 3) {
      ys = rank2_quotients_of_rank3(cd.arrs[c]);
    } else if (t.rank >= 4) {
      std::set<std::vector<SignVec>> seen;
      for (const auto& [p, q] : sampled_planes(cd.arrs[c].dim())) {
        try {
          OrientedMatroid y = rank2_projection(cd.arrs[c], p, q);
          if (seen.insert(y.covectors).second) ys.push_back(std::move(y));
        } catch (const rank_error&) {
          // degenerate sample; skip
        }
      }
    } else {
      throw structure_error("build_restricted_yz: chart of rank < 2 has no rank-2 images");
    }
    per_cell[c] = std::move(ys);
  }
  for (int c = 0; c < cd.cell_count(); ++c) {
    if (cd.charts[c].rank >= 4) a.exhaustive = false;
    for (const auto& y : per_cell[c]) a.elems.push_back({c, intern(y)});
  }

  int n = (int)a.elems.size();
  int nc = cd.cell_count();

  // Cell-pair admissibility: carrier inclusion plus the t-clause, which only
  // depends on the two charts.
  std::vector<std::vector<char>> cell_ok(nc, std::vector<char>(nc, 0));
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (int b = 0; b < nc; ++b) {
    for (int c = 0; c < nc; ++c) {
      const auto& dc = cd.cells[c].carrier;
      const auto& db = cd.cells[b].carrier;
      if (!std::includes(db.begin(), db.end(), dc.begin(), dc.end())) continue;
      cell_ok[c][b] =
          dominated_all(cd.charts[b], restricted_covectors(cd.charts[c], cd.star_masks[b]));
    }
  }

  // Order matrix with memoized y-restrictions, then reindex along a
  // topological sort so element indices form a linear extension.
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
  for (int i = 0; i < n; ++i) {
    leq[i][i] = 1;
    std::map<std::uint64_t, std::vector<SignVec>> restr;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!cell_ok[a.elems[i].cell][a.elems[j].cell]) continue;
      std::uint64_t star = cd.star_masks[a.elems[j].cell];
      auto it = restr.find(star);
      if (it == restr.end())
        it = restr.emplace(star, restricted_covectors(a.y_of(i), star)).first;
      leq[i][j] = dominated_all(a.y_of(j), it->second);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw structure_error("build_restricted_yz: order is not antisymmetric");

  // Kahn topological sort so that element indices form a linear extension.
  std::vector<int> order;
  {
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && leq[i][j]) ++indeg[j];
    std::set<int> ready;
    for (int i = 0; i < n; ++i)
      if (indeg[i] == 0) ready.insert(i);
    while (!ready.empty()) {
      int v = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(v);
      for (int j = 0; j < n; ++j)
        if (j != v && leq[v][j] && --indeg[j] == 0) ready.insert(j);
    }
    if ((int)order.size() != n)
      throw structure_error("build_restricted_yz: order has a cycle");
  }
  std::vector<int> rank_of(n);
  for (int i = 0; i < n; ++i) rank_of[order[i]] = i;
  std::vector<YElem> sorted(n);
  for (int i = 0; i < n; ++i) sorted[rank_of[i]] = a.elems[i];
  a.elems = std::move(sorted);
  a.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.leq[rank_of[i]][rank_of[j]] = leq[i][j];

  a.fiber.resize(n);
  for (int e = 0; e < n; ++e) a.fiber[e] = rank2_circle(a.y_of(e));
  return a;
}

std::vector<SignVec> fiber_circle(const AssocPosets& a, int yelem) {
  std::vector<SignVec> circle = rank2_circle(a.y_of(yelem));
  // rho^{-1}(yelem) is exactly the set of nonzero covectors of y.
  std::set<SignVec> from_circle(circle.begin(), circle.end());
  std::set<SignVec> from_fiber(a.fiber[yelem].begin(), a.fiber[yelem].end());
  if (from_circle != from_fiber)
    throw structure_error("fiber_circle: rho-fiber does not match the circle");
  return circle;
}

namespace {

// S as positions on the cyclic fiber; contractible iff a nonempty proper
// contiguous arc.
bool contractible_arc(const std::vector<char>& in, int len) {
  int count = 0;
  for (char c : in) count += c;
  if (count == 0 || count == len) return false;
  // Count blocks of consecutive members cyclically.
  int blocks = 0;
  for (int i = 0; i < len; ++i)
    if (in[i] && !in[(i + len - 1) % len]) ++blocks;
  return blocks == 1;
}

QuasifibResult quasifib_impl(const AssocPosets& a, bool parallel) {
  int n = (int)a.elems.size();
  std::vector<QuasifibResult> results(n);
  auto body = [&](int i) {
    QuasifibResult res;
    for (std::size_t zi = 0; zi < a.fiber[i].size() && res.ok; ++zi) {
      const SignVec& z = a.fiber[i][zi];
      for (int j = 0; j < n && res.ok; ++j) {
        int len = (int)a.fiber[j].size();
        if (i != j && a.leq[i][j]) {
          // Up-set fiber over j: z' >= restriction of z.
          SignVec zr = z.restricted(a.star_of(j));
          std::vector<char> in(len, 0);
          for (int k = 0; k < len; ++k) in[k] = a.fiber[j][k].dominates(zr);
          if (!contractible_arc(in, len)) {
            res = {false, a.z_index(i, z), j, "up-set fiber is not a contractible arc"};
          }
        } else if (i != j && a.leq[j][i]) {
          // Down-set fiber over j: restriction of z' dominated by z.
          std::uint64_t star_i = a.star_of(i);
          std::vector<char> in(len, 0);
          for (int k = 0; k < len; ++k) in[k] = z.dominates(a.fiber[j][k].restricted(star_i));
          if (!contractible_arc(in, len)) {
            res = {false, a.z_index(i, z), j, "down-set fiber is not a contractible arc"};
          }
        }
      }
    }
    results[i] = res;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
  for (const auto& r : results)
    if (!r.ok) return r;
  return {};
}

}  // namespace

QuasifibResult quasifib_check(const AssocPosets& a) { return quasifib_impl(a, true); }
QuasifibResult quasifib_check_serial(const AssocPosets& a) { return quasifib_impl(a, false); }

}  // namespace pontcalc
