#include "pontcalc/complex.hpp"

#include <algorithm>
#include <set>

namespace pontcalc {

OrderedComplex OrderedComplex::from_facets(int nv, const std::vector<std::vector<int>>& facets) {
  int d = 0;
  for (const auto& f : facets) d = std::max<int>(d, (int)f.size() - 1);
  std::vector<std::set<std::vector<int>>> by_dim(d + 1);
  for (const auto& f : facets) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    for (int v : s)
      if (v < 0 || v >= nv) throw input_error("from_facets: vertex out of range");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw input_error("from_facets: repeated vertex in facet");
    // All subsets.
    int k = (int)s.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) sub.push_back(s[i]);
      by_dim[sub.size() - 1].insert(std::move(sub));
    }
  }
  OrderedComplex out;
  out.nv_ = nv;
  out.flat_.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    out.flat_[k].reserve(by_dim[k].size() * (k + 1));
    for (const auto& s : by_dim[k])
      out.flat_[k].insert(out.flat_[k].end(), s.begin(), s.end());
  }
  return out;
}

OrderedComplex OrderedComplex::order_complex(int n, const std::function<bool(int, int)>& less,
                                             int max_dim) {
  OrderedComplex out;
  out.nv_ = n;
  out.flat_.resize(max_dim + 1);
  // Successor lists (strictly greater, higher index only).
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (less(i, j)) above[i].push_back(j);
  // DFS chain enumeration.  Chains are emitted in lexicographic order
  // because vertices and successor lists are in increasing order.
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int last) {
    int k = (int)chain.size() - 1;
    out.flat_[k].insert(out.flat_[k].end(), chain.begin(), chain.end());
    if (k == max_dim) return;
    for (int nxt : above[last]) {
      chain.push_back(nxt);
      grow(nxt);
      chain.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    chain.assign(1, v);
    grow(v);
  }
  return out;
}

int OrderedComplex::find(int k, std::span<const int> verts) const {
  if (k < 0 || k > dim()) return -1;
  const auto& arr = flat_[k];
  int width = k + 1;
  int lo = 0, hi = (int)(arr.size() / width);
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    const int* p = arr.data() + (std::size_t)mid * width;
    int cmp = 0;
    for (int i = 0; i < width; ++i) {
      if (p[i] != verts[i]) {
        cmp = p[i] < verts[i] ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

void OrderedComplex::set_dimension_data(int k, std::vector<int> flat) {
  if ((int)flat_.size() <= k) flat_.resize(k + 1);
  flat_[k] = std::move(flat);
}

int LocalSystem::sign(int u, int v) const {
  if (u == v) return 1;
  int a = std::min(u, v), b = std::max(u, v);
  std::array<int, 2> e{a, b};
  int idx = cx->find(1, e);
  if (idx < 0) throw structure_error("LocalSystem::sign: edge not in complex");
  return edge_sign[idx];
}

bool LocalSystem::cocycle_ok() const {
  for (int t = 0; t < cx->count(2); ++t) {
    auto s = cx->simplex(2, t);
    if (sign(s[0], s[1]) * sign(s[1], s[2]) * sign(s[0], s[2]) != 1) return false;
  }
  return true;
}

SystemPtr tensor_system(const OrderedComplex& cx, const SystemPtr& a, const SystemPtr& b) {
  if (!a && !b) return nullptr;
  auto out = std::make_shared<LocalSystem>();
  out->cx = &cx;
  int ne = cx.count(1);
  out->edge_sign.assign(ne, 1);
  bool trivial = true;
  for (int i = 0; i < ne; ++i) {
    int s = (a ? a->edge_sign[i] : 1) * (b ? b->edge_sign[i] : 1);
    out->edge_sign[i] = (std::int8_t)s;
    if (s != 1) trivial = false;
  }
  if (trivial) return nullptr;
  return out;
}

Chain Chain::operator-(const Chain& o) const {
  Chain r = *this;
  for (const auto& [i, v] : o.coef) r.add(i, -v);
  return r;
}

Chain Chain::operator*(const Rat& s) const {
  Chain r;
  r.cx = cx;
  r.deg = deg;
  r.sys = sys;
  if (s == 0) return r;
  for (const auto& [i, v] : coef) r.coef.emplace(i, v * s);
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain r = *this;
  for (const auto& [i, v] : o.coef) r.add(i, -v);
  return r;
}

bool SimplicialMap::valid() const {
  if ((int)vertex_map.size() != source->vertex_count()) return false;
  for (int k = 1; k <= source->dim(); ++k) {
    for (int i = 0; i < source->count(k); ++i) {
      auto s = source->simplex(k, i);
      std::vector<int> img;
      for (int v : s) img.push_back(vertex_map[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (img.size() == 1) continue;
      if (target->find((int)img.size() - 1, img) < 0) return false;
    }
  }
  return true;
}

}  // namespace pontcalc
