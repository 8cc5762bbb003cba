#include <algorithm>
#include <map>

#include "pontcalc/oriented_matroid.hpp"

namespace pontcalc {

namespace {

// Splits the nonzero covectors of a rank-2 OM into cocircuits (rank 1) and
// topes (rank 2).  A cocircuit is a minimal nonzero covector.
void split_rank2(const OrientedMatroid& m, std::vector<SignVec>& cocircuits,
                 std::vector<SignVec>& topes) {
  std::vector<SignVec> nz;
  for (const auto& v : m.covectors)
    if (!v.is_zero()) nz.push_back(v);
  for (const auto& v : nz) {
    bool minimal = true;
    for (const auto& w : nz)
      if (!(w == v) && v.dominates(w)) {
        minimal = false;
        break;
      }
    (minimal ? cocircuits : topes).push_back(v);
  }
}

}  // namespace

std::vector<SignVec> rank2_circle(const OrientedMatroid& m) {
  if (m.rank != 2 || covector_poset_rank(m.covectors) != 2)
    throw rank_error("rank2_circle: oriented matroid is not rank 2");
  std::vector<SignVec> cocircuits, topes;
  split_rank2(m, cocircuits, topes);
  if (cocircuits.size() != topes.size() || cocircuits.size() < 2)
    throw structure_error("rank2_circle: covectors do not form a polygon");

  // Each tope must cover exactly two cocircuits and vice versa; walk the
  // resulting cycle starting from the least cocircuit.
  std::map<SignVec, std::vector<SignVec>> tope_faces;
  std::map<SignVec, std::vector<SignVec>> coc_up;
  for (const auto& t : topes)
    for (const auto& c : cocircuits)
      if (t.dominates(c)) {
        tope_faces[t].push_back(c);
        coc_up[c].push_back(t);
      }
  for (const auto& [t, cs] : tope_faces)
    if (cs.size() != 2) throw structure_error("rank2_circle: tope with wrong face count");
  for (const auto& [c, ts] : coc_up)
    if (ts.size() != 2) throw structure_error("rank2_circle: cocircuit with wrong coface count");
  if (coc_up.size() != cocircuits.size())
    throw structure_error("rank2_circle: isolated cocircuit");

  SignVec start = *std::min_element(cocircuits.begin(), cocircuits.end());
  std::vector<SignVec> cycle;
  SignVec cur = start;
  SignVec prev_tope;
  bool have_prev = false;
  for (std::size_t step = 0; step < cocircuits.size(); ++step) {
    cycle.push_back(cur);
    const auto& ups = coc_up[cur];
    SignVec t = (!have_prev) ? std::min(ups[0], ups[1]) : (ups[0] == prev_tope ? ups[1] : ups[0]);
    cycle.push_back(t);
    const auto& faces = tope_faces[t];
    cur = (faces[0] == cur) ? faces[1] : faces[0];
    prev_tope = t;
    have_prev = true;
  }
  if (!(cur == start)) throw structure_error("rank2_circle: walk did not close up");
  if (cycle.size() != cocircuits.size() + topes.size())
    throw structure_error("rank2_circle: walk missed covectors");
  return cycle;
}

Chirotope rank2_chirotope(const OrientedMatroid& m) {
  if (m.rank != 2) throw rank_error("rank2_chirotope: rank must be 2");
  std::vector<SignVec> cycle = rank2_circle(m);
  // Declare the walk direction positive and read chi off consecutive
  // (cocircuit, tope) pairs: the tope following c satisfies
  // T(e) = -chi(e,f) c(f) whenever c(e) = 0 != T(e) and c(f) != 0.
  Chirotope chi((std::uint8_t)m.n, 2);
  std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; i += 2) {
    const SignVec& c = cycle[i];
    const SignVec& t = cycle[(i + 1) % len];
    for (int e = 0; e < m.n; ++e) {
      if (c.at(e) != 0 || t.at(e) == 0) continue;
      for (int f = 0; f < m.n; ++f) {
        if (c.at(f) == 0) continue;
        std::vector<int> ef{e, f};
        int val = -t.at(e) * c.at(f);
        int old = chi.value(ef);
        if (old != 0 && old != val)
          throw structure_error("rank2_chirotope: inconsistent circle data");
        chi.set(ef, val);
        std::vector<int> fe{f, e};
        chi.set(fe, -val);
      }
    }
  }
  // Normalize: + on the lexicographically least independent pair.
  for (int e = 0; e < m.n; ++e)
    for (int f = e + 1; f < m.n; ++f) {
      std::vector<int> t{e, f};
      if (chi.value(t) > 0) return chi;
      if (chi.value(t) < 0) return chi.negated();
    }
  throw structure_error("rank2_chirotope: identically zero");
}

std::vector<SignVec> rank2_circle_oriented(const OrientedMatroid& m, const Chirotope& chi) {
  std::vector<SignVec> cycle = rank2_circle(m);
  // The cycle alternates c_0, T_0, c_1, T_1, ...; decide whether the walk
  // direction is the positive one for chi.  From a cocircuit c the positively
  // next tope T satisfies T(e) = -chi(e,f) c(f) for e with c(e)=0!=T(e) and
  // any f with c(f)!=0.
  const SignVec& c0 = cycle[0];
  const SignVec& t0 = cycle[1];
  int e = -1, f = -1;
  for (int i = 0; i < m.n; ++i)
    if (c0.at(i) == 0 && t0.at(i) != 0) {
      e = i;
      break;
    }
  for (int i = 0; i < m.n; ++i)
    if (c0.at(i) != 0) {
      f = i;
      break;
    }
  if (e < 0 || f < 0) throw structure_error("rank2_circle_oriented: degenerate circle");
  std::vector<int> ef{e, f};
  int expect = -chi.value(ef) * c0.at(f);
  if (expect == 0) throw structure_error("rank2_circle_oriented: chirotope misses class");
  if (t0.at(e) != expect) {
    // Reverse: keep cycle[0] first, flip direction.
    std::vector<SignVec> rev;
    rev.push_back(cycle[0]);
    for (std::size_t i = cycle.size() - 1; i >= 1; --i) rev.push_back(cycle[i]);
    cycle = rev;
  }
  return cycle;
}

}  // namespace pontcalc
