#include "pontcalc/chain_ops.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "pontcalc/parallel.hpp"

namespace pontcalc {

namespace {

int sys_sign(const SystemPtr& s, int u, int v) { return s ? s->sign(u, v) : 1; }

// Transport by stepping through consecutive vertices; equals the single-edge
// sign by the cocycle condition but exercises different lookups.
int path_sign(const SystemPtr& s, std::span<const int> verts, int upto) {
  if (!s) return 1;
  int acc = 1;
  for (int i = 0; i < upto; ++i) acc *= s->sign(verts[i], verts[i + 1]);
  return acc;
}

}  // namespace

Chain boundary(const Chain& c) {
  Chain out;
  out.cx = c.cx;
  out.deg = c.deg - 1;
  out.sys = c.sys;
  if (c.deg == 0) return out;
  std::vector<int> face(c.deg);
  for (const auto& [idx, a] : c.coef) {
    auto s = c.cx->simplex(c.deg, idx);
    for (int i = 0; i <= c.deg; ++i) {
      int k = 0;
      for (int j = 0; j <= c.deg; ++j)
        if (j != i) face[k++] = s[j];
      int fidx = c.cx->find(c.deg - 1, face);
      if (fidx < 0) throw structure_error("boundary: face missing from complex");
      Rat v = (i % 2) ? -a : a;
      if (i == 0) v *= sys_sign(c.sys, s[0], s[1]);
      out.add(fidx, v);
    }
  }
  return out;
}

namespace {

Cochain coboundary_impl(const Cochain& c, bool parallel) {
  Cochain out;
  out.cx = c.cx;
  out.deg = c.deg + 1;
  out.sys = c.sys;
  int m = c.cx->count(c.deg + 1);
  if (m == 0 || c.coef.empty()) return out;
  std::vector<Rat> vals((std::size_t)m);
  auto body = [&](int t) {
    auto s = c.cx->simplex(c.deg + 1, t);
    std::vector<int> face(c.deg + 1);
    Rat acc = 0;
    for (int i = 0; i <= c.deg + 1; ++i) {
      int k = 0;
      for (int j = 0; j <= c.deg + 1; ++j)
        if (j != i) face[k++] = s[j];
      int fidx = c.cx->find(c.deg, face);
      if (fidx < 0) continue;
      Rat v = c.at(fidx);
      if (v == 0) continue;
      if (i % 2) v = -v;
      if (i == 0) v *= sys_sign(c.sys, s[0], s[1]);
      acc += v;
    }
    vals[t] = std::move(acc);
  };
  if (parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (int t = 0; t < m; ++t) body(t);
  } else {
    for (int t = 0; t < m; ++t) body(t);
  }
  for (int t = 0; t < m; ++t)
    if (vals[t] != 0) out.coef.emplace(t, std::move(vals[t]));
  return out;
}

Cochain cup_impl(const Cochain& a, const Cochain& b, bool parallel) {
  if (a.cx != b.cx) throw input_error("cup: complex mismatch");
  Cochain out;
  out.cx = a.cx;
  out.deg = a.deg + b.deg;
  out.sys = tensor_system(*a.cx, a.sys, b.sys);
  int m = a.cx->count(out.deg);
  if (m == 0 || a.coef.empty() || b.coef.empty()) return out;
  std::vector<Rat> vals((std::size_t)m);
  auto body = [&](int t) {
    auto s = a.cx->simplex(out.deg, t);
    std::span<const int> front = s.subspan(0, a.deg + 1);
    std::span<const int> back = s.subspan(a.deg, b.deg + 1);
    int fi = a.cx->find(a.deg, front);
    int bi = a.cx->find(b.deg, back);
    if (fi < 0 || bi < 0) return;
    Rat va = a.at(fi);
    if (va == 0) return;
    Rat vb = b.at(bi);
    if (vb == 0) return;
    // b's value is anchored at the middle vertex; bring it to the front.
    vals[t] = va * vb * sys_sign(b.sys, s[0], s[a.deg]);
  };
  if (parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (int t = 0; t < m; ++t) body(t);
  } else {
    for (int t = 0; t < m; ++t) body(t);
  }
  for (int t = 0; t < m; ++t)
    if (vals[t] != 0) out.coef.emplace(t, std::move(vals[t]));
  return out;
}

}  // namespace

Cochain coboundary(const Cochain& c) { return coboundary_impl(c, true); }
Cochain coboundary_serial(const Cochain& c) { return coboundary_impl(c, false); }
Cochain cup(const Cochain& a, const Cochain& b) { return cup_impl(a, b, true); }
Cochain cup_serial(const Cochain& a, const Cochain& b) { return cup_impl(a, b, false); }

Chain cap(const Chain& c, const Cochain& psi) {
  if (c.cx != psi.cx) throw input_error("cap: complex mismatch");
  if (c.deg < psi.deg) throw input_error("cap: chain degree below cochain degree");
  Chain out;
  out.cx = c.cx;
  out.deg = c.deg - psi.deg;
  out.sys = tensor_system(*c.cx, c.sys, psi.sys);
  for (const auto& [idx, a] : c.coef) {
    auto s = c.cx->simplex(c.deg, idx);
    std::span<const int> front = s.subspan(0, psi.deg + 1);
    std::span<const int> back = s.subspan(psi.deg, out.deg + 1);
    int fi = c.cx->find(psi.deg, front);
    if (fi < 0) continue;
    Rat v = psi.at(fi);
    if (v == 0) continue;
    int bi = c.cx->find(out.deg, back);
    if (bi < 0) throw structure_error("cap: back face missing");
    // Both the chain coefficient and the cochain value move their anchor
    // from s[0] to s[psi.deg]; in the tensor system that is one transport.
    out.add(bi, a * v * sys_sign(out.sys, s[0], s[psi.deg]));
  }
  return out;
}

Chain cap_dual(const Chain& c, const Cochain& psi) {
  if (c.cx != psi.cx) throw input_error("cap: complex mismatch");
  if (c.deg < psi.deg) throw input_error("cap: chain degree below cochain degree");
  Chain out;
  out.cx = c.cx;
  out.deg = c.deg - psi.deg;
  out.sys = tensor_system(*c.cx, c.sys, psi.sys);
  // Back-face-major: group the chain's simplices by their back faces and
  // accumulate with path-product transport.
  std::map<int, Rat> acc;
  for (const auto& [idx, a] : c.coef) {
    auto s = c.cx->simplex(c.deg, idx);
    std::vector<int> front(s.begin(), s.begin() + psi.deg + 1);
    int fi = c.cx->find(psi.deg, front);
    if (fi < 0) continue;
    auto it = psi.coef.find(fi);
    if (it == psi.coef.end()) continue;
    std::vector<int> back(s.begin() + psi.deg, s.end());
    int bi = c.cx->find(out.deg, back);
    if (bi < 0) throw structure_error("cap_dual: back face missing");
    int tc = path_sign(c.sys, s, psi.deg);
    int tp = path_sign(psi.sys, s, psi.deg);
    Rat v = a * it->second * tc * tp;
    auto jt = acc.find(bi);
    if (jt == acc.end())
      acc.emplace(bi, std::move(v));
    else
      jt->second += v;
  }
  for (auto& [i, v] : acc)
    if (v != 0) out.coef.emplace(i, std::move(v));
  return out;
}

Chain pushforward(const SimplicialMap& f, const Chain& c, SystemPtr target_sys) {
  if (c.cx != f.source) throw input_error("pushforward: chain not on source complex");
  Chain out;
  out.cx = f.target;
  out.deg = c.deg;
  out.sys = std::move(target_sys);
  // The source system must be the pullback of the target system, so
  // coefficients pass through untransported.
  std::vector<int> img(c.deg + 1);
  for (const auto& [idx, a] : c.coef) {
    auto s = c.cx->simplex(c.deg, idx);
    bool degenerate = false;
    for (int i = 0; i <= c.deg; ++i) {
      img[i] = f.vertex_map[s[i]];
      if (i > 0 && img[i] == img[i - 1]) degenerate = true;
      if (i > 0 && img[i] < img[i - 1])
        throw structure_error("pushforward: vertex map is not monotone on a simplex");
    }
    if (degenerate) continue;
    int ti = f.target->find(c.deg, img);
    if (ti < 0) throw structure_error("pushforward: image simplex missing");
    out.add(ti, a);
  }
  return out;
}

Chain pushforward_dual(const SimplicialMap& f, const Chain& c, SystemPtr target_sys) {
  // Adjoint route: group source simplices by nondegenerate image.
  if (c.cx != f.source) throw input_error("pushforward: chain not on source complex");
  Chain out;
  out.cx = f.target;
  out.deg = c.deg;
  out.sys = std::move(target_sys);
  std::map<std::vector<int>, Rat> acc;
  for (const auto& [idx, a] : c.coef) {
    auto s = c.cx->simplex(c.deg, idx);
    std::vector<int> img;
    for (int v : s) img.push_back(f.vertex_map[v]);
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    if (img != sorted) throw structure_error("pushforward_dual: non-monotone image");
    auto it = acc.find(img);
    if (it == acc.end())
      acc.emplace(std::move(img), a);
    else
      it->second += a;
  }
  for (const auto& [img, v] : acc) {
    if (v == 0) continue;
    int ti = f.target->find(c.deg, img);
    if (ti < 0) throw structure_error("pushforward_dual: image simplex missing");
    out.coef.emplace(ti, v);
  }
  return out;
}

Cochain unit_cochain(const OrderedComplex& cx, SystemPtr sys) {
  Cochain u;
  u.cx = &cx;
  u.deg = 0;
  u.sys = std::move(sys);
  for (int i = 0; i < cx.count(0); ++i) u.coef.emplace(i, Rat(1));
  return u;
}

Cochain cochain_power(const Cochain& base, int k, const OrderedComplex& cx) {
  if (k == 0) return unit_cochain(cx);
  Cochain acc = base;
  for (int i = 1; i < k; ++i) acc = cup(acc, base);
  return acc;
}

SystemPtr pullback_system(const SimplicialMap& f, const SystemPtr& target_sys) {
  if (!target_sys) return nullptr;
  auto out = std::make_shared<LocalSystem>();
  out->cx = f.source;
  int ne = f.source->count(1);
  out->edge_sign.assign(ne, 1);
  bool trivial = true;
  for (int i = 0; i < ne; ++i) {
    auto e = f.source->simplex(1, i);
    int s = target_sys->sign(f.vertex_map[e[0]], f.vertex_map[e[1]]);
    out->edge_sign[i] = (std::int8_t)s;
    if (s != 1) trivial = false;
  }
  return trivial ? nullptr : out;
}

BarycentricData barycentric(const OrderedComplex& x) {
  BarycentricData b;
  b.base = &x;
  b.elem_of.resize(x.dim() + 1);
  for (int k = 0; k <= x.dim(); ++k) {
    b.elem_of[k].resize(x.count(k));
    for (int i = 0; i < x.count(k); ++i) {
      b.elem_of[k][i] = (int)b.elems.size();
      b.elems.push_back({k, i});
    }
  }
  int n = (int)b.elems.size();
  auto subset = [&](int p, int q) {
    auto [kp, ip] = b.elems[p];
    auto [kq, iq] = b.elems[q];
    if (kp >= kq) return false;
    auto sp = x.simplex(kp, ip);
    auto sq = x.simplex(kq, iq);
    return std::includes(sq.begin(), sq.end(), sp.begin(), sp.end());
  };
  b.cx = OrderedComplex::order_complex(n, subset, x.dim());
  b.last_vertex.source = &b.cx;
  b.last_vertex.target = &x;
  for (int p = 0; p < n; ++p) {
    auto [k, i] = b.elems[p];
    auto s = x.simplex(k, i);
    b.last_vertex.vertex_map.push_back(s[k]);
  }
  return b;
}

Chain sd_chain(const BarycentricData& b, const Chain& c) {
  const OrderedComplex& x = *b.base;
  if (c.cx != &x) throw input_error("sd_chain: chain not on base complex");
  Chain out;
  out.cx = &b.cx;
  out.deg = c.deg;
  out.sys = pullback_system(b.last_vertex, c.sys);
  int k = c.deg;
  std::vector<int> perm(k + 1);
  for (const auto& [idx, a] : c.coef) {
    auto s = x.simplex(k, idx);
    std::iota(perm.begin(), perm.end(), 0);
    // All permutations with their signs.
    std::vector<int> p = perm;
    std::sort(p.begin(), p.end());
    do {
      int sign = 1;
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          if (p[i] > p[j]) sign = -sign;
      // Flag of faces {s[p0]}, {s[p0],s[p1]}, ...
      std::vector<int> flag;
      std::vector<int> verts;
      bool ok = true;
      for (int i = 0; i <= k && ok; ++i) {
        verts.push_back(s[p[i]]);
        std::vector<int> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        int fi = x.find(i, sorted);
        if (fi < 0) {
          ok = false;
          break;
        }
        flag.push_back(b.elem_of[i][fi]);
      }
      if (!ok) throw structure_error("sd_chain: missing face");
      std::sort(flag.begin(), flag.end());
      int fidx = b.cx.find(k, flag);
      if (fidx < 0) throw structure_error("sd_chain: missing flag simplex");
      // Transport the coefficient from the anchor s[0] to s[p0].
      int t = c.sys ? c.sys->sign(s[0], s[p[0]]) : 1;
      out.add(fidx, a * sign * t);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

}  // namespace pontcalc
