#include "pontcalc/fundamental.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "pontcalc/chain_ops.hpp"

namespace pontcalc {

namespace {

// Relative orientation of two top simplices across a shared codimension-1
// face, as +-1 coherence of their canonical (sorted) orientations: coherent
// (+1) when the induced orientations on the face cancel.
int face_coherence(std::span<const int> s1, std::span<const int> s2, std::span<const int> face) {
  auto missing_index = [&](std::span<const int> s) {
    for (int i = 0; i < (int)s.size(); ++i) {
      bool in_face = std::binary_search(face.begin(), face.end(), s[i]);
      if (!in_face) return i;
    }
    return -1;
  };
  int i1 = missing_index(s1), i2 = missing_index(s2);
  // d[sorted simplex] hits the face with sign (-1)^i; cancellation means the
  // two induced signs are opposite.
  return ((i1 + i2) % 2) ? 1 : -1;
}

}  // namespace

void check_closed_pseudomanifold(const OrderedComplex& x, int n) {
  if (x.dim() != n) throw structure_error("pseudomanifold: dimension mismatch");
  int top = x.count(n);
  if (top == 0) throw structure_error("pseudomanifold: no top simplices");
  // Purity: every simplex is a face of a top simplex.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < x.count(k); ++i) {
      auto s = x.simplex(k, i);
      bool found = false;
      for (int t = 0; t < top && !found; ++t) {
        auto ts = x.simplex(n, t);
        found = std::includes(ts.begin(), ts.end(), s.begin(), s.end());
      }
      if (!found) throw structure_error("pseudomanifold: complex is not pure");
    }
  // Each (n-1)-simplex in exactly two top simplices.
  std::vector<int> face_count(x.count(n - 1), 0);
  std::vector<int> face(n);
  for (int t = 0; t < top; ++t) {
    auto s = x.simplex(n, t);
    for (int i = 0; i <= n; ++i) {
      int k = 0;
      for (int j = 0; j <= n; ++j)
        if (j != i) face[k++] = s[j];
      ++face_count[x.find(n - 1, face)];
    }
  }
  for (int c : face_count)
    if (c != 2) throw structure_error("pseudomanifold: codimension-1 face not in two facets");
  // Dual-graph connectivity.
  std::map<int, std::vector<int>> by_face;
  for (int t = 0; t < top; ++t) {
    auto s = x.simplex(n, t);
    for (int i = 0; i <= n; ++i) {
      int k = 0;
      for (int j = 0; j <= n; ++j)
        if (j != i) face[k++] = s[j];
      by_face[x.find(n - 1, face)].push_back(t);
    }
  }
  std::vector<char> seen(top, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    auto s = x.simplex(n, t);
    for (int i = 0; i <= n; ++i) {
      int k = 0;
      for (int j = 0; j <= n; ++j)
        if (j != i) face[k++] = s[j];
      for (int u : by_face[x.find(n - 1, face)])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          q.push(u);
        }
    }
  }
  if (reached != top) throw structure_error("pseudomanifold: not connected");
}

FundamentalClass fundamental_class(const OrderedComplex& x, int n) {
  check_closed_pseudomanifold(x, n);
  int top = x.count(n);

  // Dual adjacency with coherence signs.
  std::map<int, std::vector<int>> by_face;
  std::vector<int> face(n);
  for (int t = 0; t < top; ++t) {
    auto s = x.simplex(n, t);
    for (int i = 0; i <= n; ++i) {
      int k = 0;
      for (int j = 0; j <= n; ++j)
        if (j != i) face[k++] = s[j];
      by_face[x.find(n - 1, face)].push_back(t);
    }
  }

  // Local orientation of the star of each vertex: BFS over top simplices
  // containing the vertex, keeping induced orientations cancelling.  Stars of
  // vertices in a manifold are orientable, so this never conflicts; conflicts
  // indicate bad input.
  int nv = x.vertex_count();
  std::vector<std::map<int, int>> star_orient(nv);  // vertex -> (top simplex -> +-1)
  for (int v = 0; v < nv; ++v) {
    std::vector<int> tops;
    for (int t = 0; t < top; ++t) {
      auto s = x.simplex(n, t);
      if (std::binary_search(s.begin(), s.end(), v)) tops.push_back(t);
    }
    if (tops.empty()) throw structure_error("fundamental_class: isolated vertex");
    std::map<int, int>& o = star_orient[v];
    std::queue<int> q;
    o[tops[0]] = 1;
    q.push(tops[0]);
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      auto s = x.simplex(n, t);
      for (int i = 0; i <= n; ++i) {
        if (s[i] == v) continue;  // only cross faces containing v
        int k = 0;
        for (int j = 0; j <= n; ++j)
          if (j != i) face[k++] = s[j];
        int fidx = x.find(n - 1, face);
        for (int u : by_face[fidx]) {
          if (u == t) continue;
          auto su = x.simplex(n, u);
          int coh = face_coherence(s, su, x.simplex(n - 1, fidx));
          int want = o[t] * coh;
          auto it = o.find(u);
          if (it == o.end()) {
            o[u] = want;
            q.push(u);
          } else if (it->second != want) {
            throw structure_error("fundamental_class: vertex star is not orientable");
          }
        }
      }
    }
    if ((int)o.size() != (int)tops.size())
      throw structure_error("fundamental_class: vertex star is not dual-connected");
  }

  // Edge comparison signs; independent of the witnessing top simplex.
  int ne = x.count(1);
  std::vector<std::int8_t> eps(ne, 1);
  for (int e = 0; e < ne; ++e) {
    auto ev = x.simplex(1, e);
    int u = ev[0], v = ev[1];
    int val = 0;
    for (int t = 0; t < top; ++t) {
      auto s = x.simplex(n, t);
      if (!std::binary_search(s.begin(), s.end(), u)) continue;
      if (!std::binary_search(s.begin(), s.end(), v)) continue;
      int cmp = star_orient[u][t] * star_orient[v][t];
      if (val == 0)
        val = cmp;
      else if (val != cmp)
        throw structure_error("fundamental_class: inconsistent edge comparison");
    }
    if (val == 0) throw structure_error("fundamental_class: edge not in a facet");
    eps[e] = (std::int8_t)val;
  }

  // Orientability: look for a potential tau with eps(u,v) = tau_u tau_v.
  std::vector<int> tau(nv, 0);
  bool orientable = true;
  {
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < ne; ++e) {
      auto ev = x.simplex(1, e);
      adj[ev[0]].push_back({ev[1], eps[e]});
      adj[ev[1]].push_back({ev[0], eps[e]});
    }
    for (int start = 0; start < nv && orientable; ++start) {
      if (tau[start] != 0) continue;
      tau[start] = 1;
      std::queue<int> q;
      q.push(start);
      while (!q.empty() && orientable) {
        int u = q.front();
        q.pop();
        for (auto [v, s] : adj[u]) {
          int want = tau[u] * s;
          if (tau[v] == 0) {
            tau[v] = want;
            q.push(v);
          } else if (tau[v] != want) {
            orientable = false;
          }
        }
      }
    }
  }

  FundamentalClass out;
  out.orientable = orientable;
  if (orientable) {
    // Re-gauge the local orientations so the system becomes trivial.
    for (int v = 0; v < nv; ++v)
      for (auto& [t, s] : star_orient[v]) s *= tau[v];
    out.system = nullptr;
  } else {
    auto sys = std::make_shared<LocalSystem>();
    sys->cx = &x;
    sys->edge_sign = eps;
    if (!sys->cocycle_ok())
      throw structure_error("fundamental_class: orientation system fails cocycle condition");
    out.system = sys;
  }

  Chain c;
  c.cx = &x;
  c.deg = n;
  c.sys = out.system;
  for (int t = 0; t < top; ++t) {
    auto s = x.simplex(n, t);
    c.coef.emplace(t, Rat(star_orient[s[0]][t]));
  }
  out.cycle = c;
  if (!boundary(out.cycle).is_zero())
    throw structure_error("fundamental_class: twisted boundary does not vanish");
  return out;
}

}  // namespace pontcalc
