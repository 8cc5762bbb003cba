#include "pontcalc/chern.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <queue>

#include "pontcalc/chain_ops.hpp"
#include "pontcalc/homology.hpp"
#include "pontcalc/matrix.hpp"
#include "pontcalc/parallel.hpp"

namespace pontcalc {

std::vector<Rat> theta_vertex(const FiberOrientation& o, int yelem) {
  int m = (int)o.circle[yelem].size();
  return std::vector<Rat>(m, Rat(1, m));
}

Rat theta_uniform(int order_complex_edges) { return Rat(1, order_complex_edges); }

const Rat* ThetaEdge::at(int pu, int pv) const {
  auto it = std::lower_bound(cross.begin(), cross.end(), std::make_pair(pu, pv));
  if (it == cross.end() || *it != std::make_pair(pu, pv)) return nullptr;
  return &value[it - cross.begin()];
}

namespace {

// Fiber cocycle value on the canonical (cocircuit, tope) pair given circle
// positions: +1/m when the tope follows the cocircuit, -1/m when it
// precedes.
Rat theta_pair(int m, int cpos, int tpos) {
  if ((cpos + 1) % m == tpos) return Rat(1, m);
  if ((tpos + 1) % m == cpos) return Rat(-1, m);
  throw structure_error("theta_pair: cells are not adjacent");
}

struct DiffConstraint {
  int lhs, rhs;  // x[lhs] - x[rhs] = c
  Rat c;
};

}  // namespace

ChernData::ChernData(const AssocPosets& a) : a_(&a) {
  int n = (int)a.elems.size();
  orient_.chi.resize(n);
  orient_.circle.resize(n);
  for (int e = 0; e < n; ++e) {
    orient_.chi[e] = rank2_chirotope(a.y_of(e));
    orient_.circle[e] = rank2_circle_oriented(a.y_of(e), orient_.chi[e]);
  }
  orient_.eps.assign(n, std::vector<std::int8_t>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!a.leq[u][v]) continue;
      const ThetaEdge& te = theta_edge(u, v);
      orient_.eps[u][v] = (std::int8_t)te.eps;
      orient_.eps[v][u] = (std::int8_t)te.eps;
    }
  }
}

void ChernData::verify_orientation_cocycle() const {
  // Orientation presheaf sanity: the comparison signs must satisfy the
  // cocycle condition on every chain u < v < w.
  const AssocPosets& a = *a_;
  int n = (int)a.elems.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!a.leq[u][v]) continue;
      for (int w = v + 1; w < n; ++w) {
        if (!a.leq[v][w] || !a.leq[u][w]) continue;
        if (orient_.eps[u][v] * orient_.eps[v][w] * orient_.eps[u][w] != 1)
          throw structure_error("orient_fibers: cocycle condition fails on triangle (" +
                                std::to_string(u) + "," + std::to_string(v) + "," +
                                std::to_string(w) + ")");
      }
    }
}

ThetaEdge ChernData::solve_edge(int u, int v) const {
  const AssocPosets& a = *a_;
  const auto& cu = orient_.circle[u];
  const auto& cv = orient_.circle[v];
  int mu = (int)cu.size(), mv = (int)cv.size();
  std::uint64_t star_v = a.star_of(v);

  ThetaEdge te;
  for (int p = 0; p < mu; ++p) {
    SignVec zr = cu[p].restricted(star_v);
    for (int q = 0; q < mv; ++q)
      if (cv[q].dominates(zr)) te.cross.push_back({p, q});
  }
  if (te.cross.empty()) throw structure_error("theta_edge: no cross edges");

  auto idx = [&](int p, int q) {
    auto it = std::lower_bound(te.cross.begin(), te.cross.end(), std::make_pair(p, q));
    return (int)(it - te.cross.begin());
  };

  // Difference constraints from the two triangle families; the Theta term of
  // the v-fiber carries the frame sign, so feasibility decides eps.
  for (int sign : {1, -1}) {
    std::vector<DiffConstraint> cons;
    // (c_u, T_u, z_v): x[T,q] - x[c,q] = -Theta_u(c,T)
    for (std::size_t k = 0; k < te.cross.size(); ++k) {
      auto [p, q] = te.cross[k];
      if (p % 2 != 0) continue;  // cocircuits sit at even positions
      for (int t : {(p + 1) % mu, (p + mu - 1) % mu}) {
        if (!te.at(t, q)) continue;
        cons.push_back({idx(t, q), idx(p, q), -theta_pair(mu, p, t)});
      }
    }
    // (z_u, c_v, T_v): x[p,T] - x[p,c] = eps * Theta_v(c,T)
    for (std::size_t k = 0; k < te.cross.size(); ++k) {
      auto [p, q] = te.cross[k];
      if (q % 2 != 0) continue;
      for (int t : {(q + 1) % mv, (q + mv - 1) % mv}) {
        if (!te.at(p, t)) continue;
        cons.push_back({idx(p, t), idx(p, q), Rat(sign) * theta_pair(mv, q, t)});
      }
    }
    // Feasibility: BFS over the constraint graph.
    int nx = (int)te.cross.size();
    std::vector<std::vector<std::pair<int, Rat>>> adj(nx);
    for (const auto& c : cons) {
      adj[c.rhs].push_back({c.lhs, c.c});
      adj[c.lhs].push_back({c.rhs, -c.c});
    }
    std::vector<char> seen(nx, 0);
    std::vector<Rat> val(nx);
    std::vector<int> comp(nx, -1);
    bool feasible = true;
    int ncomp = 0;
    for (int s = 0; s < nx && feasible; ++s) {
      if (seen[s]) continue;
      int cid = ncomp++;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      comp[s] = cid;
      val[s] = 0;
      while (!q.empty() && feasible) {
        int x = q.front();
        q.pop();
        for (const auto& [y, c] : adj[x]) {
          if (!seen[y]) {
            seen[y] = 1;
            comp[y] = cid;
            val[y] = val[x] + c;
            q.push(y);
          } else if (val[y] != val[x] + c) {
            feasible = false;
            break;
          }
        }
      }
    }
    if (!feasible) continue;
    // Minimum norm: center each component.
    std::vector<Rat> sum(ncomp, Rat(0));
    std::vector<int> count(ncomp, 0);
    for (int i = 0; i < nx; ++i) {
      sum[comp[i]] += val[i];
      ++count[comp[i]];
    }
    for (int i = 0; i < nx; ++i) val[i] -= sum[comp[i]] / count[comp[i]];
    te.eps = sign;
    te.value = std::move(val);
    te.component = std::move(comp);
    return te;
  }
  throw structure_error("theta_edge: infeasible in both orientation frames");
}

const ThetaEdge& ChernData::theta_edge(int u, int v) {
  auto key = std::make_pair(u, v);
  auto it = edges_.find(key);
  if (it != edges_.end()) return it->second;
  if (!a_->leq[u][v] || u == v) throw input_error("theta_edge: not a comparable pair");

  // Structural memo: cross bitmap plus circle sizes.
  const auto& cu = orient_.circle[u];
  const auto& cv = orient_.circle[v];
  std::uint64_t star_v = a_->star_of(v);
  std::vector<std::uint64_t> mkey;
  mkey.push_back(((std::uint64_t)cu.size() << 32) | cv.size());
  for (std::size_t p = 0; p < cu.size(); ++p) {
    std::uint64_t bits = 0;
    SignVec zr = cu[p].restricted(star_v);
    for (std::size_t q = 0; q < cv.size(); ++q)
      if (cv[q].dominates(zr)) bits |= std::uint64_t(1) << q;
    mkey.push_back(bits);
  }
  auto mit = memo_.find(mkey);
  if (mit != memo_.end()) return edges_.emplace(key, mit->second).first->second;
  ThetaEdge te = solve_edge(u, v);
  memo_.emplace(std::move(mkey), te);
  return edges_.emplace(key, std::move(te)).first->second;
}

Rat ChernData::omega_value(int u, int v, int w) {
  const ThetaEdge& uv = theta_edge(u, v);
  const ThetaEdge& vw = theta_edge(v, w);
  const ThetaEdge& uw = theta_edge(u, w);
  int euv = orient_.eps[u][v];
  bool have = false;
  Rat r;
  for (auto [pu, pv] : uv.cross) {
    for (auto [pv2, pw] : vw.cross) {
      if (pv2 != pv) continue;
      const Rat* direct = uw.at(pu, pw);
      if (!direct)
        throw structure_error("omega_value: missing direct cross edge (order not transitive?)");
      Rat cur = *uv.at(pu, pv) + Rat(euv) * *vw.at(pv, pw) - *direct;
      if (!have) {
        r = cur;
        have = true;
      } else if (cur != r) {
        throw presheaf_error("omega_value: holonomy is not constant over the fiber flags");
      }
    }
  }
  if (!have) throw structure_error("omega_value: no admissible fiber flag");
  return -r;
}

SystemPtr ChernData::orientation_system(const OrderedComplex& ycx) const {
  auto sys = std::make_shared<LocalSystem>();
  sys->cx = &ycx;
  int ne = ycx.count(1);
  sys->edge_sign.assign(ne, 1);
  bool trivial = true;
  for (int e = 0; e < ne; ++e) {
    auto s = ycx.simplex(1, e);
    int val = orient_.eps[s[0]][s[1]];
    if (val == 0) throw structure_error("orientation_system: edge without comparison sign");
    sys->edge_sign[e] = (std::int8_t)val;
    if (val != 1) trivial = false;
  }
  if (trivial) return nullptr;
  if (!sys->cocycle_ok())
    throw structure_error("orientation_system: cocycle condition fails");
  return sys;
}

Cochain ChernData::omega(const OrderedComplex& ycx) {
  verify_orientation_cocycle();
  // Make sure every edge is solved before the parallel read-only pass.
  for (int e = 0; e < ycx.count(1); ++e) {
    auto s = ycx.simplex(1, e);
    theta_edge(s[0], s[1]);
  }
  Cochain out;
  out.cx = &ycx;
  out.deg = 2;
  out.sys = orientation_system(ycx);
  int nt = ycx.count(2);
  std::vector<Rat> vals(nt);
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count())
  for (int t = 0; t < nt; ++t) {
    auto s = ycx.simplex(2, t);
    vals[t] = omega_value(s[0], s[1], s[2]);
  }
  for (int t = 0; t < nt; ++t)
    if (vals[t] != 0) out.coef.emplace(t, std::move(vals[t]));
  return out;
}

OrderedComplex y_order_complex(const AssocPosets& a, int max_dim) {
  int n = (int)a.elems.size();
  return OrderedComplex::order_complex(
      n, [&](int i, int j) { return i != j && a.leq[i][j]; }, max_dim);
}

int eps_homology_oracle(const AssocPosets& a, const FiberOrientation& o, int u, int v) {
  const auto& cu = o.circle[u];
  const auto& cv = o.circle[v];
  int mu = (int)cu.size(), mv = (int)cv.size();
  std::uint64_t star_v = a.star_of(v);
  // Local complex: circle_u vertices 0..mu-1, circle_v vertices mu..mu+mv-1.
  std::vector<std::vector<int>> facets;
  auto cross_ok = [&](int p, int q) { return cv[q].dominates(cu[p].restricted(star_v)); };
  for (int p = 0; p < mu; ++p) facets.push_back({p, (p + 1) % mu});
  for (int q = 0; q < mv; ++q) facets.push_back({mu + q, mu + (q + 1) % mv});
  for (int p = 0; p < mu; ++p)
    for (int q = 0; q < mv; ++q) {
      if (!cross_ok(p, q)) continue;
      facets.push_back({p, mu + q});
      for (int t : {(p + 1) % mu, (p + mu - 1) % mu})
        if (cross_ok(t, q)) facets.push_back({std::min(p, t), std::max(p, t), mu + q});
      for (int t : {(q + 1) % mv, (q + mv - 1) % mv})
        if (cross_ok(p, t)) facets.push_back({p, mu + std::min(q, t), mu + std::max(q, t)});
    }
  OrderedComplex cx = OrderedComplex::from_facets(mu + mv, facets);
  auto cycle = [&](int base, int m) {
    Chain c;
    c.cx = &cx;
    c.deg = 1;
    for (int p = 0; p < m; ++p) {
      int x = base + p, y = base + (p + 1) % m;
      std::array<int, 2> e{std::min(x, y), std::max(x, y)};
      c.add(cx.find(1, e), x < y ? Rat(1) : Rat(-1));
    }
    return c;
  };
  Chain cyc_u = cycle(0, mu), cyc_v = cycle(mu, mv);
  if (homologous(cyc_u, cyc_v)) return 1;
  if (homologous(cyc_u, cyc_v * Rat(-1))) return -1;
  throw structure_error("eps_homology_oracle: fiber cycles are not comparable");
}

std::vector<Rat> theta_edge_dense_oracle(const AssocPosets& a, const FiberOrientation& o,
                                         int u, int v, int eps,
                                         const std::vector<std::pair<int, int>>& cross) {
  const auto& cu = o.circle[u];
  const auto& cv = o.circle[v];
  int mu = (int)cu.size(), mv = (int)cv.size();
  auto pos = [&](int p, int q) {
    auto it = std::lower_bound(cross.begin(), cross.end(), std::make_pair(p, q));
    if (it == cross.end() || *it != std::make_pair(p, q)) return -1;
    return (int)(it - cross.begin());
  };
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (auto [p, q] : cross) {
    if (p % 2 == 0)
      for (int t : {(p + 1) % mu, (p + mu - 1) % mu}) {
        int j = pos(t, q);
        if (j < 0) continue;
        std::vector<Rat> row(cross.size(), Rat(0));
        row[j] += 1;
        row[pos(p, q)] -= 1;
        rows.push_back(std::move(row));
        rhs.push_back(-theta_pair(mu, p, t));
      }
    if (q % 2 == 0)
      for (int t : {(q + 1) % mv, (q + mv - 1) % mv}) {
        int j = pos(p, t);
        if (j < 0) continue;
        std::vector<Rat> row(cross.size(), Rat(0));
        row[j] += 1;
        row[pos(p, q)] -= 1;
        rows.push_back(std::move(row));
        rhs.push_back(Rat(eps) * theta_pair(mv, q, t));
      }
  }
  QMat m((int)rows.size(), (int)cross.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cross.size(); ++j) m(i, j) = rows[i][j];
  auto sol = min_norm_solve_dense_oracle(m, rhs);
  if (!sol) throw structure_error("theta_edge_dense_oracle: infeasible");
  return *sol;
}

}  // namespace pontcalc
