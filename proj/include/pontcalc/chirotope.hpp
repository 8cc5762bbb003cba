#ifndef PONTCALC_CHIROTOPE_HPP
#define PONTCALC_CHIROTOPE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "pontcalc/sign_vector.hpp"

namespace pontcalc {

// Rank r sign function on r-tuples of a ground set {0..n-1}, stored as a
// dense table over all n^r tuples so that malformed (non-alternating) inputs
// can be represented and rejected by check_chirotope.
struct Chirotope {
  std::uint8_t n = 0;
  std::uint8_t r = 0;
  std::vector<std::int8_t> vals;  // index = sum tuple[i] * n^i

  Chirotope() = default;
  Chirotope(std::uint8_t ground, std::uint8_t rank)
      : n(ground), r(rank), vals(pow_size(ground, rank), 0) {}

  static std::size_t pow_size(std::uint8_t n, std::uint8_t r) {
    std::size_t s = 1;
    for (int i = 0; i < r; ++i) s *= n;
    return s;
  }

  std::size_t index(const std::vector<int>& tuple) const {
    std::size_t idx = 0, mul = 1;
    for (int i = 0; i < r; ++i) {
      idx += std::size_t(tuple[i]) * mul;
      mul *= n;
    }
    return idx;
  }

  int value(const std::vector<int>& tuple) const { return vals[index(tuple)]; }
  void set(const std::vector<int>& tuple, int s) { vals[index(tuple)] = (std::int8_t)s; }

  // Fills the whole table from values on strictly increasing tuples,
  // extending alternately (repeated entries get 0).
  static Chirotope from_sorted_values(
      std::uint8_t n, std::uint8_t r,
      const std::function<int(const std::vector<int>&)>& sorted_val);

  Chirotope negated() const {
    Chirotope c = *this;
    for (auto& v : c.vals) v = -v;
    return c;
  }

  bool operator==(const Chirotope& o) const {
    return n == o.n && r == o.r && vals == o.vals;
  }
};

// True iff chi is alternating, not identically zero, and satisfies the
// combinatorial Grassmann-Pluecker relations: for all e_2..e_r, f_0..f_r the
// term set {(-1)^i chi(f_i,e_2..e_r) chi(f_0..^f_i..f_r)} is {0} or contains
// both + and -.  Instances with repeated entries hold automatically for
// alternating chi, so the quantifier runs over sorted distinct tuples.
bool check_chirotope(const Chirotope& chi);

// Cocircuits spanned by (r-1)-subsets, read off the chirotope, then closed
// under composition.  Includes the zero vector; result sorted.
std::vector<SignVec> covectors_from_chirotope(const Chirotope& chi);

// Closure of the given generators (plus 0 and negatives) under composition.
std::vector<SignVec> composition_closure(std::uint8_t n, std::vector<SignVec> gens);

}  // namespace pontcalc

#endif
