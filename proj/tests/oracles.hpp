#ifndef PONTCALC_TESTS_ORACLES_HPP
#define PONTCALC_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library's covector pipeline.

#include <algorithm>
#include <vector>

#include "pontcalc/oriented_matroid.hpp"
#include "pontcalc/rational.hpp"

namespace pontcalc::testing {

// One homogeneous constraint sum(coef_i y_i) REL 0.
struct Constraint {
  std::vector<Rat> coef;
  int rel;  // +1: > 0, 0: == 0
};

// Exact Fourier-Motzkin feasibility for a homogeneous system of strict
// inequalities and equalities in few variables.
inline bool fm_feasible(std::vector<Constraint> cons, int dim) {
  for (int var = dim - 1; var >= 0; --var) {
    // Substitute using an equality when one mentions the variable.
    int eq = -1;
    for (std::size_t i = 0; i < cons.size(); ++i)
      if (cons[i].rel == 0 && cons[i].coef[var] != 0) {
        eq = (int)i;
        break;
      }
    std::vector<Constraint> next;
    if (eq >= 0) {
      Constraint e = cons[eq];
      for (std::size_t i = 0; i < cons.size(); ++i) {
        if ((int)i == eq) continue;
        Constraint c = cons[i];
        if (c.coef[var] != 0) {
          Rat f = c.coef[var] / e.coef[var];
          for (int j = 0; j < dim; ++j) c.coef[j] -= f * e.coef[j];
        }
        next.push_back(std::move(c));
      }
    } else {
      std::vector<Constraint> lower, upper, rest;
      for (auto& c : cons) {
        if (c.coef[var] > 0)
          lower.push_back(c);  // y_var > -(rest)/coef
        else if (c.coef[var] < 0)
          upper.push_back(c);
        else
          rest.push_back(c);
      }
      next = rest;
      for (const auto& l : lower)
        for (const auto& u : upper) {
          // l: a y + p > 0 (a>0), u: b y + q > 0 (b<0) -> combine to
          // a*q - b*p > 0 ... equivalently eliminate y.
          Constraint c;
          c.rel = 1;
          c.coef.assign(dim, Rat(0));
          for (int j = 0; j < dim; ++j)
            c.coef[j] = l.coef[var] * u.coef[j] - u.coef[var] * l.coef[j];
          next.push_back(std::move(c));
        }
    }
    cons = std::move(next);
    // Drop satisfied trivial constraints, detect contradictions.
    std::vector<Constraint> kept;
    for (auto& c : cons) {
      bool all_zero = true;
      for (int j = 0; j < dim; ++j)
        if (c.coef[j] != 0) all_zero = false;
      if (all_zero) {
        if (c.rel == 1) return false;  // 0 > 0
        continue;
      }
      kept.push_back(std::move(c));
    }
    cons = std::move(kept);
  }
  return true;
}

// Does some y have sign(y . v_e) = s(e) for all e?
inline bool sign_vector_realizable(const VectorArrangement& arr, const SignVec& s) {
  int dim = (int)arr.dim();
  std::vector<Constraint> cons;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    Constraint c;
    c.coef = arr.columns[e];
    int v = s.at(e);
    if (v == 0) {
      c.rel = 0;
    } else {
      c.rel = 1;
      if (v < 0)
        for (auto& x : c.coef) x = -x;
    }
    cons.push_back(std::move(c));
  }
  return fm_feasible(std::move(cons), dim);
}

// Brute-force covector enumeration over the exact fan of y-directions: all
// 3^n candidate sign vectors, each checked by exact LP feasibility.
inline std::vector<SignVec> covectors_bruteforce(const VectorArrangement& arr) {
  int n = (int)arr.size();
  std::vector<SignVec> out;
  std::vector<int> digits(n, 0);
  while (true) {
    SignVec s((std::uint8_t)n);
    for (int e = 0; e < n; ++e) s.set(e, digits[e] == 2 ? -1 : digits[e]);
    if (sign_vector_realizable(arr, s)) out.push_back(s);
    int i = 0;
    while (i < n && ++digits[i] == 3) digits[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pontcalc::testing

#endif
