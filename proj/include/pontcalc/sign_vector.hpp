#ifndef PONTCALC_SIGN_VECTOR_HPP
#define PONTCALC_SIGN_VECTOR_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace pontcalc {

// Sign vector over a ground set of at most 64 elements, packed as two bit
// masks.  Values per element are {0,+,-}.  The componentwise order has 0
// below both + and -.
struct SignVec {
  std::uint8_t n = 0;
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  SignVec() = default;
  explicit SignVec(std::uint8_t size) : n(size) {}

  int at(std::size_t e) const {
    if (pos >> e & 1) return 1;
    if (neg >> e & 1) return -1;
    return 0;
  }
  void set(std::size_t e, int s) {
    pos &= ~(std::uint64_t(1) << e);
    neg &= ~(std::uint64_t(1) << e);
    if (s > 0) pos |= std::uint64_t(1) << e;
    if (s < 0) neg |= std::uint64_t(1) << e;
  }
  std::uint64_t support() const { return pos | neg; }
  bool is_zero() const { return (pos | neg) == 0; }

  SignVec operator-() const {
    SignVec r = *this;
    std::swap(r.pos, r.neg);
    return r;
  }

  // x(e) if nonzero, else y(e).
  friend SignVec compose(const SignVec& x, const SignVec& y) {
    SignVec r = x;
    std::uint64_t free = ~x.support();
    r.pos |= y.pos & free;
    r.neg |= y.neg & free;
    return r;
  }

  // Componentwise order: true iff this dominates v (v <= this).
  bool dominates(const SignVec& v) const {
    return (v.pos & ~pos) == 0 && (v.neg & ~neg) == 0;
  }

  // Zero out all entries except those in `mask`.  Restriction of covectors
  // under deletion keeps the full ground set with loops outside.
  SignVec restricted(std::uint64_t mask) const {
    SignVec r = *this;
    r.pos &= mask;
    r.neg &= mask;
    return r;
  }

  bool operator==(const SignVec& o) const {
    return n == o.n && pos == o.pos && neg == o.neg;
  }
  // Fixed total order on sign vectors: elementwise with 0 < + < -.  This is
  // the canonical order used to sort covector sets for OM equality.
  bool operator<(const SignVec& o) const {
    for (std::size_t e = 0; e < n; ++e) {
      int a = code(e), b = o.code(e);
      if (a != b) return a < b;
    }
    return false;
  }

  std::string str() const;

 private:
  int code(std::size_t e) const {
    if (pos >> e & 1) return 1;
    if (neg >> e & 1) return 2;
    return 0;
  }
};

struct SignVecHash {
  std::size_t operator()(const SignVec& v) const {
    std::size_t h = std::hash<std::uint64_t>()(v.pos);
    h ^= std::hash<std::uint64_t>()(v.neg) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace pontcalc

#endif
