#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pontcalc/oriented_matroid.hpp"

using namespace pontcalc;
using namespace pontcalc::testing;

namespace {

bool antiparallel(const OrientedMatroid& m, int e, int f) {
  bool nonzero = false;
  for (const auto& v : m.covectors) {
    if (v.at(e) != -v.at(f)) return false;
    if (v.at(e) != 0) nonzero = true;
  }
  return nonzero;
}

SignVec sv(std::uint8_t n, const char* pattern) {
  SignVec s(n);
  for (int i = 0; i < n; ++i)
    s.set(i, pattern[i] == '+' ? 1 : pattern[i] == '-' ? -1 : 0);
  return s;
}

}  // namespace

TEST_CASE("check_chirotope accepts the collinear rank-2 example") {
  // chi(i,j) = sign(j-i), realized by (1,1),(2,1),(3,1).
  Chirotope chi = Chirotope::from_sorted_values(3, 2, [](const std::vector<int>&) { return 1; });
  CHECK(check_chirotope(chi));
  VectorArrangement arr;
  arr.columns = {rv({1, 1}), rv({2, 1}), rv({3, 1})};
  OrientedMatroid m = om_from_vectors(arr, 2);
  bool matches = (*m.chi == chi) || (*m.chi == chi.negated());
  CHECK(matches);
}

TEST_CASE("check_chirotope rejects zero") {
  Chirotope chi(3, 2);
  CHECK_FALSE(check_chirotope(chi));
}

TEST_CASE("single flips of the torus chart chirotope break the axioms") {
  VectorArrangement hex;
  hex.columns = {rv({0, 1}), rv({-1, 0}), rv({-1, -1}), rv({0, -1}), rv({1, 0}), rv({1, 1})};
  OrientedMatroid m = om_from_vectors(hex, 2);
  Chirotope chi = *m.chi;
  int failures = 0, flips = 0;
  for (int e = 0; e < 6; ++e)
    for (int f = e + 1; f < 6; ++f) {
      std::vector<int> ef{e, f};
      if (chi.value(ef) == 0) continue;
      Chirotope mod = chi;
      std::vector<int> fe{f, e};
      mod.set(ef, -chi.value(ef));
      mod.set(fe, -chi.value(fe));
      ++flips;
      if (!check_chirotope(mod)) ++failures;
    }
  CHECK(flips > 0);
  CHECK(failures >= 1);
}

TEST_CASE("torus linear chart at a") {
  OrientedMatroid m = om_from_vectors(torus_chart_a(), 2);
  CHECK(m.rank == 2);
  CHECK(loops(m) == std::vector<int>{0});  // a itself
  CHECK(antiparallel(m, 1, 4));            // b,e
  CHECK(antiparallel(m, 2, 5));            // c,f
  CHECK(antiparallel(m, 3, 6));            // d,g
  CHECK(covector_axioms_ok(m));
}

TEST_CASE("single nonzero vector rank 1") {
  VectorArrangement arr;
  arr.columns = {rv({2})};
  OrientedMatroid m = om_from_vectors(arr, 1);
  REQUIRE(m.covectors.size() == 3);
  CHECK(m.covectors[0] == sv(1, "0"));
  std::set<int> vals;
  for (const auto& v : m.covectors) vals.insert(v.at(0));
  CHECK(vals == std::set<int>{-1, 0, 1});
}

TEST_CASE("affine torus chart: a in convex hulls of opposite pairs") {
  OrientedMatroid m = om_from_vectors(with_appended_one(torus_chart_a()), 3);
  CHECK(m.rank == 3);
  CHECK(loops(m).empty());
  CHECK(in_convex_hull(m, 0, {1, 4}));
  CHECK(in_convex_hull(m, 0, {2, 5}));
  CHECK(in_convex_hull(m, 0, {3, 6}));
  CHECK_FALSE(in_convex_hull(m, 1, {2, 6}));  // b not in conv{c,g}
  CHECK(covector_axioms_ok(m));
}

TEST_CASE("composition") {
  SignVec x = sv(3, "+0-"), y = sv(3, "0++");
  CHECK(compose(x, y) == sv(3, "++-"));
  CHECK(compose(x, x) == x);
  CHECK(compose(SignVec(3), y) == y);
}

TEST_CASE("convex hull over the empty set is empty") {
  OrientedMatroid m = om_from_vectors(torus_chart_a(), 2);
  for (int e = 0; e < 7; ++e) CHECK_FALSE(in_convex_hull(m, e, {}));
}

TEST_CASE("weak maps along edge ab") {
  OrientedMatroid near_a = om_from_vectors(torus_chart_edge_ab(Rat(1, 4)), 2);
  OrientedMatroid mid = om_from_vectors(torus_chart_edge_ab(Rat(1, 2)), 2);
  OrientedMatroid near_b = om_from_vectors(torus_chart_edge_ab(Rat(3, 4)), 2);
  CHECK(weak_map(near_a, mid));
  CHECK_FALSE(weak_map(mid, near_a));
  CHECK(weak_map(near_b, mid));
  CHECK(weak_map(near_a, near_a));
  // The three charts are pairwise distinct.
  CHECK(near_a.covectors != mid.covectors);
  CHECK(near_b.covectors != mid.covectors);
  CHECK(near_a.covectors != near_b.covectors);
  // Covector route agrees with the chirotope-degeneration route.
  CHECK(weak_map_chirotope(near_a, mid));
  CHECK_FALSE(weak_map_chirotope(mid, near_a));
}

TEST_CASE("weak map: merging two elements into a parallel pair") {
  VectorArrangement generic;
  generic.columns = {rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({1, 2})};
  VectorArrangement merged = generic;
  merged.columns[3] = rv({2, 2});  // now parallel to element 2
  OrientedMatroid g = om_from_vectors(generic, 2);
  OrientedMatroid p = om_from_vectors(merged, 2);
  CHECK(weak_map(g, p));
  CHECK_FALSE(weak_map(p, g));
}

TEST_CASE("strong map images") {
  OrientedMatroid aff = om_from_vectors(with_appended_one(torus_chart_a()), 3);
  // Rank-0 image: only the zero covector.
  OrientedMatroid zero;
  zero.n = aff.n;
  zero.rank = 0;
  zero.covectors = {SignVec(aff.n)};
  CHECK(strong_map_image(aff, zero));
  // Projection along a generic direction.
  OrientedMatroid proj =
      rank2_projection(with_appended_one(torus_chart_a()), rv({1, 0, 0}), rv({0, 1, 2}));
  CHECK(proj.rank == 2);
  CHECK(strong_map_image(aff, proj));
  // Two distinct generic rank-2 OMs on the same elements.
  VectorArrangement a1, a2;
  a1.columns = {rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({1, 2})};
  a2.columns = {rv({1, 0}), rv({0, 1}), rv({1, -1}), rv({1, -2})};
  OrientedMatroid m1 = om_from_vectors(a1, 2), m2 = om_from_vectors(a2, 2);
  CHECK_FALSE(strong_map_image(m1, m2));
  CHECK_FALSE(strong_map_image(m2, m1));
}

TEST_CASE("rank2_circle of the torus chart is a hexagon") {
  OrientedMatroid m = om_from_vectors(torus_chart_a(), 2);
  auto cycle = rank2_circle(m);
  CHECK(cycle.size() == 12);  // 6 rank-1 + 6 rank-2 covectors
  // Alternation and composition of adjacent vertices.
  for (std::size_t i = 0; i < cycle.size(); i += 2) {
    const SignVec& c = cycle[i];
    const SignVec& t = cycle[(i + 1) % cycle.size()];
    const SignVec& c2 = cycle[(i + 2) % cycle.size()];
    CHECK(t.dominates(c));
    CHECK(t.dominates(c2));
    CHECK(compose(c, c2) == t);
  }
  std::set<SignVec> distinct(cycle.begin(), cycle.end());
  CHECK(distinct.size() == 12);
}

TEST_CASE("a single parallel class cannot form a rank-2 OM") {
  // One line only: the arrangement has rank 1, so the declared rank is
  // rejected; the minimal circle needs two classes.
  VectorArrangement arr;
  arr.columns = {rv({1, 0}), rv({-2, 0}), rv({3, 0})};
  CHECK_THROWS_AS(om_from_vectors(arr, 2), rank_error);
  OrientedMatroid rank1 = om_from_vectors(arr, 1);
  CHECK_THROWS_AS(rank2_circle(rank1), rank_error);
}

TEST_CASE("uniform rank-2 OM on two elements has a 4+4 circle") {
  VectorArrangement arr;
  arr.columns = {rv({1, 0}), rv({0, 1})};
  OrientedMatroid m = om_from_vectors(arr, 2);
  auto cycle = rank2_circle(m);
  CHECK(cycle.size() == 8);
}

TEST_CASE("rank2_quotients_of_rank3 rejects planar input") {
  VectorArrangement arr;
  arr.columns = {rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 0})};
  CHECK_THROWS_AS(rank2_quotients_of_rank3(arr), rank_error);
}

TEST_CASE("rank2_quotients_of_rank3 on the coordinate arrangement") {
  auto quotients = rank2_quotients_of_rank3(coordinate_vectors3());
  OrientedMatroid full = om_from_vectors(coordinate_vectors3(), 3);
  bool has_uniform = false, has_loop3 = false;
  for (const auto& q : quotients) {
    CHECK(q.rank == 2);
    CHECK(strong_map_image(full, q));
    if (loops(q).empty() && q.covectors.size() == 13) has_uniform = true;  // 12 nonzero + 0
    if (q.is_loop(2)) has_loop3 = true;
  }
  CHECK(has_uniform);
  CHECK(has_loop3);
}

TEST_CASE("rank2_quotients_of_rank3 on the affine torus chart") {
  auto arr = with_appended_one(torus_chart_a());
  auto quotients = rank2_quotients_of_rank3(arr);
  OrientedMatroid full = om_from_vectors(arr, 3);
  CHECK(quotients.size() > 10);
  for (const auto& q : quotients) {
    CHECK(q.rank == 2);
    CHECK(strong_map_image(full, q));
  }
}

TEST_CASE("quotient enumeration is invariant under basis change") {
  auto arr = with_appended_one(torus_chart_a());
  auto base = rank2_quotients_of_rank3(arr);
  std::set<std::vector<SignVec>> base_set;
  for (const auto& q : base) base_set.insert(q.covectors);
  // Five fixed invertible rational matrices.
  std::vector<std::vector<std::vector<Rat>>> mats = {
      {rv({1, 1, 0}), rv({0, 1, 0}), rv({0, 0, 1})},
      {rv({2, 0, 0}), rv({0, 1, 0}), rv({0, 0, 3})},
      {rv({1, 0, 1}), rv({0, 1, 0}), rv({0, 0, 1})},
      {rv({1, 2, 3}), rv({0, 1, 2}), rv({0, 0, 1})},
      {{Rat(1, 2), Rat(0), Rat(0)}, rv({1, 1, 0}), rv({0, 1, 1})},
  };
  for (const auto& a : mats) {
    VectorArrangement t;
    for (const auto& col : arr.columns) {
      std::vector<Rat> v(3, Rat(0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[i] += a[i][j] * col[j];
      t.columns.push_back(v);
    }
    auto quo = rank2_quotients_of_rank3(t);
    std::set<std::vector<SignVec>> got;
    for (const auto& q : quo) got.insert(q.covectors);
    CHECK(got == base_set);
  }
}

TEST_CASE("covector sets match the brute-force fan oracle") {
  std::vector<std::pair<VectorArrangement, int>> corpus;
  corpus.push_back({torus_chart_a(), 2});
  corpus.push_back({with_appended_one(torus_chart_a()), 3});
  corpus.push_back({torus_chart_edge_ab(Rat(1, 4)), 2});
  corpus.push_back({torus_chart_edge_ab(Rat(1, 2)), 2});
  corpus.push_back({coordinate_vectors3(), 3});
  VectorArrangement g4;
  g4.columns = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 1}), rv({1, 2, 3})};
  corpus.push_back({g4, 3});
  for (const auto& [arr, r] : corpus) {
    OrientedMatroid m = om_from_vectors(arr, r);
    auto oracle = covectors_bruteforce(arr);
    CHECK(m.covectors == oracle);
    // Chirotope <-> covector round trip.
    CHECK(covectors_from_chirotope(*m.chi) == m.covectors);
    CHECK(check_chirotope(*m.chi));
    CHECK(covector_axioms_ok(m));
  }
}

TEST_CASE("weak_map is reflexive and transitive on the edge chart family") {
  std::vector<OrientedMatroid> fam;
  for (int k = 1; k <= 5; ++k) fam.push_back(om_from_vectors(torus_chart_edge_ab(Rat(k, 6)), 2));
  for (const auto& m : fam) CHECK(weak_map(m, m));
  for (const auto& a : fam)
    for (const auto& b : fam)
      for (const auto& c : fam)
        if (weak_map(a, b) && weak_map(b, c)) CHECK(weak_map(a, c));
}

TEST_CASE("om_from_vectors rejects the all-zero arrangement") {
  VectorArrangement arr;
  arr.columns = {rv({0, 0}), rv({0, 0})};
  CHECK_THROWS_AS(om_from_vectors(arr, 1), rank_error);
}

TEST_CASE("predicates: independence and rank via the chirotope") {
  OrientedMatroid m = om_from_vectors(with_appended_one(torus_chart_a()), 3);
  CHECK(is_independent(m, {0, 1, 2}));        // a,b,c affinely independent
  CHECK_FALSE(is_independent(m, {1, 0, 4}));  // b,a,e collinear
  CHECK(subset_rank(m, {1, 0, 4}) == 2);
  CHECK(subset_rank(m, {0, 1, 2, 3, 4, 5, 6}) == 3);
  CHECK_THROWS_AS(subset_rank(m, {9}), input_error);
}
