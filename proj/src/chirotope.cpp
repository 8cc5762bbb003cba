#include "pontcalc/chirotope.hpp"

#include <algorithm>
#include <unordered_set>

namespace pontcalc {

namespace {

int sort_with_sign(std::vector<int>& t) {
  // Insertion sort, counting transpositions.  Returns 0 on repeated entries.
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

template <typename F>
void for_each_tuple(int n, int r, F&& f) {
  std::vector<int> t(r, 0);
  while (true) {
    f(t);
    int i = 0;
    while (i < r && ++t[i] == n) t[i++] = 0;
    if (i == r) break;
  }
}

template <typename F>
void for_each_sorted(int n, int k, F&& f) {
  if (k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    f(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

Chirotope Chirotope::from_sorted_values(
    std::uint8_t n, std::uint8_t r,
    const std::function<int(const std::vector<int>&)>& sorted_val) {
  Chirotope c(n, r);
  for_each_tuple(n, r, [&](const std::vector<int>& t) {
    std::vector<int> s = t;
    int sign = sort_with_sign(s);
    c.set(t, sign == 0 ? 0 : sign * sorted_val(s));
  });
  return c;
}

bool check_chirotope(const Chirotope& chi) {
  const int n = chi.n, r = chi.r;
  if (n == 0 || r == 0 || chi.vals.empty()) return false;

  bool nonzero = false;
  bool alternating = true;
  for_each_tuple(n, r, [&](const std::vector<int>& t) {
    int v = chi.value(t);
    if (v != 0) nonzero = true;
    std::vector<int> s = t;
    int sign = sort_with_sign(s);
    int expect = sign == 0 ? 0 : sign * chi.value(s);
    if (v != expect) alternating = false;
  });
  if (!nonzero || !alternating) return false;

  // Grassmann-Pluecker over sorted distinct tuples; see header note.
  bool ok = true;
  for_each_sorted(n, r - 1, [&](const std::vector<int>& e) {
    if (!ok) return;
    for_each_sorted(n, r + 1, [&](const std::vector<int>& f) {
      if (!ok) return;
      bool has_pos = false, has_neg = false;
      std::vector<int> left(r), right(r);
      for (int i = 0; i <= r; ++i) {
        left[0] = f[i];
        std::copy(e.begin(), e.end(), left.begin() + 1);
        int k = 0;
        for (int j = 0; j <= r; ++j)
          if (j != i) right[k++] = f[j];
        int term = chi.value(left) * chi.value(right);
        if (i % 2) term = -term;
        if (term > 0) has_pos = true;
        if (term < 0) has_neg = true;
      }
      if (has_pos != has_neg) ok = false;
    });
  });
  return ok;
}

std::vector<SignVec> composition_closure(std::uint8_t n, std::vector<SignVec> gens) {
  std::unordered_set<SignVec, SignVecHash> seen;
  SignVec zero(n);
  seen.insert(zero);
  std::vector<SignVec> work;
  for (auto& g : gens) {
    if (seen.insert(g).second) work.push_back(g);
    SignVec ng = -g;
    if (seen.insert(ng).second) work.push_back(ng);
  }
  std::vector<SignVec> all(work);
  while (!work.empty()) {
    SignVec x = work.back();
    work.pop_back();
    std::size_t m = all.size();
    for (std::size_t i = 0; i < m; ++i) {
      SignVec y = all[i];
      for (SignVec c : {compose(x, y), compose(y, x)}) {
        if (seen.insert(c).second) {
          work.push_back(c);
          all.push_back(c);
        }
      }
    }
  }
  std::vector<SignVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVec> covectors_from_chirotope(const Chirotope& chi) {
  const int n = chi.n, r = chi.r;
  std::vector<SignVec> cocircuits;
  std::unordered_set<SignVec, SignVecHash> seen;
  for_each_sorted(n, r - 1, [&](const std::vector<int>& b) {
    SignVec c((std::uint8_t)n);
    std::vector<int> t(r);
    std::copy(b.begin(), b.end(), t.begin());
    for (int e = 0; e < n; ++e) {
      t[r - 1] = e;
      c.set(e, chi.value(t));
    }
    if (c.is_zero()) return;
    if (seen.insert(c).second && seen.insert(-c).second) cocircuits.push_back(c);
  });
  return composition_closure((std::uint8_t)n, std::move(cocircuits));
}

}  // namespace pontcalc
