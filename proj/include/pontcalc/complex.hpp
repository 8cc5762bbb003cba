#ifndef PONTCALC_COMPLEX_HPP
#define PONTCALC_COMPLEX_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "pontcalc/rational.hpp"

namespace pontcalc {

// Finite abstract simplicial complex on vertices 0..nv-1 carrying their index
// order.  Simplices are stored per dimension as flat arrays of sorted vertex
// tuples, lexicographically sorted, so lookup is a binary search.  A complex
// may be truncated above max_dim (order complexes of large posets are only
// materialized up to the degree the computation needs).
class OrderedComplex {
 public:
  OrderedComplex() = default;

  static OrderedComplex from_facets(int nv, const std::vector<std::vector<int>>& facets);

  // Order complex of a poset given by a strict relation on indices that only
  // relates lower to higher index (a linear extension ordering); simplices
  // are the chains with at most max_dim+1 elements.
  static OrderedComplex order_complex(int n, const std::function<bool(int, int)>& less,
                                      int max_dim);

  int vertex_count() const { return nv_; }
  int dim() const { return (int)flat_.size() - 1; }
  int count(int k) const {
    return (k < 0 || k > dim()) ? 0 : (int)(flat_[k].size() / (k + 1));
  }
  std::span<const int> simplex(int k, int idx) const {
    return {flat_[k].data() + (std::size_t)idx * (k + 1), (std::size_t)(k + 1)};
  }
  // Index of a sorted vertex tuple; -1 when absent.
  int find(int k, std::span<const int> verts) const;

  // Used by builders; tuples must be sorted and unique per dimension.
  void set_dimension_data(int k, std::vector<int> flat);
  void set_vertex_count(int nv) { nv_ = nv; }

 private:
  int nv_ = 0;
  std::vector<std::vector<int>> flat_;
};

// Locally constant sign system on the 1-skeleton.  Transport along an edge
// is its own inverse; the product of the three edge signs around every
// 2-simplex must be +1.  A null SystemPtr means the trivial system.
struct LocalSystem {
  const OrderedComplex* cx = nullptr;
  std::vector<std::int8_t> edge_sign;  // aligned with cx'es 1-simplices

  int sign(int u, int v) const;
  bool cocycle_ok() const;
};

using SystemPtr = std::shared_ptr<const LocalSystem>;

// Entrywise product; squares cancel to the trivial system (returned as null).
SystemPtr tensor_system(const OrderedComplex& cx, const SystemPtr& a, const SystemPtr& b);

// Coefficient data shared by chains and cochains: a sparse map from simplex
// index (within the fixed degree) to a rational, with the coefficient
// anchored at the least vertex of the simplex.
struct Chain {
  const OrderedComplex* cx = nullptr;
  int deg = 0;
  SystemPtr sys;
  std::map<int, Rat> coef;

  void add(int idx, const Rat& v) {
    if (v == 0) return;
    auto it = coef.find(idx);
    if (it == coef.end()) {
      coef.emplace(idx, v);
    } else {
      it->second += v;
      if (it->second == 0) coef.erase(it);
    }
  }
  bool is_zero() const { return coef.empty(); }
  Chain operator-(const Chain& o) const;
  Chain operator*(const Rat& s) const;
  bool operator==(const Chain& o) const {
    return cx == o.cx && deg == o.deg && coef == o.coef;
  }
};

struct Cochain {
  const OrderedComplex* cx = nullptr;
  int deg = 0;
  SystemPtr sys;
  std::map<int, Rat> coef;

  void add(int idx, const Rat& v) {
    if (v == 0) return;
    auto it = coef.find(idx);
    if (it == coef.end()) {
      coef.emplace(idx, v);
    } else {
      it->second += v;
      if (it->second == 0) coef.erase(it);
    }
  }
  Rat at(int idx) const {
    auto it = coef.find(idx);
    return it == coef.end() ? Rat(0) : it->second;
  }
  bool is_zero() const { return coef.empty(); }
  Cochain operator-(const Cochain& o) const;
  bool operator==(const Cochain& o) const {
    return cx == o.cx && deg == o.deg && coef == o.coef;
  }
};

struct SimplicialMap {
  const OrderedComplex* source = nullptr;
  const OrderedComplex* target = nullptr;
  std::vector<int> vertex_map;

  // Checks that the image of every simplex is a simplex of the target.
  bool valid() const;
};

}  // namespace pontcalc

#endif
