#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pontcalc/chain_ops.hpp"
#include "pontcalc/complex.hpp"
#include "pontcalc/fundamental.hpp"
#include "pontcalc/homology.hpp"

using namespace pontcalc;

namespace {

// 9-vertex torus: 3x3 grid with up-right diagonals, vertex (i,j) -> 3*j+i.
OrderedComplex torus9() {
  auto vid = [](int i, int j) { return 3 * ((j % 3 + 3) % 3) + (i % 3 + 3) % 3; };
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      facets.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      facets.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
    }
  return OrderedComplex::from_facets(9, facets);
}

OrderedComplex rp2_6() {
  std::vector<std::vector<int>> facets = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5},
                                          {0, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5},
                                          {2, 3, 4}, {3, 4, 5}};
  return OrderedComplex::from_facets(6, facets);
}

OrderedComplex hexagon_circle() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 6; ++i) facets.push_back({i, (i + 1) % 6});
  return OrderedComplex::from_facets(6, facets);
}

Chain random_chain(const OrderedComplex& cx, int deg, std::mt19937& rng, SystemPtr sys = nullptr) {
  Chain c;
  c.cx = &cx;
  c.deg = deg;
  c.sys = sys;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < cx.count(deg); ++i) {
    int v = coef(rng);
    if (v) c.coef.emplace(i, Rat(v));
  }
  return c;
}

Cochain random_cochain(const OrderedComplex& cx, int deg, std::mt19937& rng,
                       SystemPtr sys = nullptr) {
  Cochain c;
  c.cx = &cx;
  c.deg = deg;
  c.sys = sys;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < cx.count(deg); ++i) {
    int v = coef(rng);
    if (v) c.coef.emplace(i, Rat(v));
  }
  return c;
}

}  // namespace

TEST_CASE("boundary of a triangle") {
  OrderedComplex cx = OrderedComplex::from_facets(3, {{0, 1, 2}});
  Chain c;
  c.cx = &cx;
  c.deg = 2;
  c.coef.emplace(0, Rat(1));
  Chain b = boundary(c);
  // d[a,b,c] = [b,c] - [a,c] + [a,b]
  REQUIRE(b.coef.size() == 3);
  std::array<int, 2> bc{1, 2}, ac{0, 2}, ab{0, 1};
  CHECK(b.coef.at(cx.find(1, bc)) == 1);
  CHECK(b.coef.at(cx.find(1, ac)) == -1);
  CHECK(b.coef.at(cx.find(1, ab)) == 1);
}

TEST_CASE("boundary squared vanishes on random chains") {
  // Random 4-complex: all faces of a few 4-simplices on 8 vertices.
  std::vector<std::vector<int>> facets = {
      {0, 1, 2, 3, 4}, {1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {3, 4, 5, 6, 7}, {0, 2, 4, 6, 7}};
  OrderedComplex cx = OrderedComplex::from_facets(8, facets);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int deg = 2 + trial % 3;
    Chain c = random_chain(cx, deg, rng);
    CHECK(boundary(boundary(c)).is_zero());
  }
}

TEST_CASE("coboundary squared vanishes and matches the serial reference") {
  OrderedComplex cx = torus9();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Cochain c = random_cochain(cx, trial % 2, rng);
    Cochain d1 = coboundary(c);
    CHECK(d1 == coboundary_serial(c));
    CHECK(coboundary(d1).is_zero());
  }
}

TEST_CASE("coboundary of a vertex indicator on a path") {
  OrderedComplex cx = OrderedComplex::from_facets(3, {{0, 1}, {1, 2}});
  Cochain psi;
  psi.cx = &cx;
  psi.deg = 0;
  psi.coef.emplace(1, Rat(1));  // indicator of the middle vertex
  Cochain d = coboundary(psi);
  std::array<int, 2> e01{0, 1}, e12{1, 2};
  CHECK(d.at(cx.find(1, e01)) == 1);    // delta psi([0,1]) = psi(1) - psi(0)
  CHECK(d.at(cx.find(1, e12)) == -1);
}

TEST_CASE("cup: unit acts as identity and Leibniz holds") {
  OrderedComplex cx = torus9();
  std::mt19937 rng(13);
  Cochain one = unit_cochain(cx);
  for (int trial = 0; trial < 200; ++trial) {
    int da = trial % 2, db = (trial / 2) % 2;
    Cochain a = random_cochain(cx, da, rng);
    Cochain b = random_cochain(cx, db, rng);
    CHECK(cup(one, b) == b);
    Cochain lhs = coboundary(cup(a, b));
    Cochain rhs = cup(coboundary(a), b);
    Cochain ab = cup(a, coboundary(b));
    if (da % 2 == 1)
      rhs = rhs - ab;
    else {
      for (const auto& [i, v] : ab.coef) rhs.add(i, v);
    }
    CHECK(lhs == rhs);
    CHECK(cup(a, b) == cup_serial(a, b));
  }
}

TEST_CASE("cap: unit, boundary formula, dual implementation") {
  OrderedComplex cx = torus9();
  std::mt19937 rng(17);
  Cochain one = unit_cochain(cx);
  for (int trial = 0; trial < 200; ++trial) {
    int dc = 1 + trial % 2;
    int dp = trial % (dc + 1);
    Chain c = random_chain(cx, dc, rng);
    Cochain p = random_cochain(cx, dp, rng);
    CHECK(cap(c, one) == c);
    CHECK(cap(c, p) == cap_dual(c, p));
    // d(c cap psi) = (-1)^dp ( dc cap psi - c cap delta psi )
    if (dp < dc) {
      Chain lhs = boundary(cap(c, p));
      Chain t1 = cap(boundary(c), p);
      Chain t2 = cap(c, coboundary(p));
      Chain rhs = t1 - t2;
      if (dp % 2 == 1) rhs = rhs * Rat(-1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pushforward: identity, collapse, chain map") {
  OrderedComplex cx = torus9();
  SimplicialMap id{&cx, &cx, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK(id.valid());
  std::mt19937 rng(19);
  Chain c = random_chain(cx, 2, rng);
  CHECK(pushforward(id, c) == c);
  // Collapse a 1-complex edge to a vertex.
  OrderedComplex seg = OrderedComplex::from_facets(2, {{0, 1}});
  OrderedComplex pt = OrderedComplex::from_facets(1, {{0}});
  SimplicialMap collapse{&seg, &pt, {0, 0}};
  Chain e;
  e.cx = &seg;
  e.deg = 1;
  e.coef.emplace(0, Rat(1));
  CHECK(pushforward(collapse, e).is_zero());
  // Chain map property on a quotient-like map within the torus would need a
  // poset map; dual route must agree either way.
  CHECK(pushforward_dual(id, c) == c);
}

TEST_CASE("fundamental class of the 9-vertex torus") {
  OrderedComplex cx = torus9();
  auto fc = fundamental_class(cx, 2);
  CHECK(fc.orientable);
  CHECK(fc.system == nullptr);
  CHECK(fc.cycle.coef.size() == 18);
  for (const auto& [i, v] : fc.cycle.coef) CHECK((v == 1 || v == -1));
  CHECK(boundary(fc.cycle).is_zero());
}

TEST_CASE("fundamental class of RP2 is twisted") {
  OrderedComplex cx = rp2_6();
  auto fc = fundamental_class(cx, 2);
  CHECK_FALSE(fc.orientable);
  REQUIRE(fc.system != nullptr);
  CHECK(fc.system->cocycle_ok());
  CHECK(boundary(fc.cycle).is_zero());
  // Untwisted top homology vanishes; twisted has rank 1.
  CHECK(betti(cx, nullptr, 2) == 0);
  CHECK(betti(cx, fc.system, 2) == 1);
  CHECK(betti(cx, nullptr, 1) == 0);
  CHECK(betti(cx, nullptr, 0) == 1);
}

TEST_CASE("circle as hexagon") {
  OrderedComplex cx = hexagon_circle();
  auto fc = fundamental_class(cx, 1);
  CHECK(fc.orientable);
  CHECK(fc.cycle.coef.size() == 6);
}

TEST_CASE("homology of the torus") {
  OrderedComplex cx = torus9();
  CHECK(betti(cx, nullptr, 0) == 1);
  CHECK(betti(cx, nullptr, 1) == 2);
  CHECK(betti(cx, nullptr, 2) == 1);
}

TEST_CASE("boundary witness: meridian plus its reverse bounds") {
  OrderedComplex cx = torus9();
  // Meridian 0-1-2-0 and the reverse chain cancel; is_boundary(0) = true with
  // a zero witness, and a meridian minus itself is zero.  More interesting:
  // the difference of two parallel meridians bounds.
  auto edge = [&](int a, int b, int s) {
    std::array<int, 2> e{std::min(a, b), std::max(a, b)};
    int idx = cx.find(1, e);
    REQUIRE(idx >= 0);
    return std::pair<int, int>(idx, a < b ? s : -s);
  };
  Chain m1, m2;
  m1.cx = m2.cx = &cx;
  m1.deg = m2.deg = 1;
  for (auto [i, a, b] : {std::tuple<int, int, int>{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}) {
    auto [idx, s] = edge(a, b, 1);
    m1.add(idx, Rat(s));
    auto [idx2, s2] = edge(a + 3, b + 3, 1);
    m2.add(idx2, Rat(s2));
  }
  CHECK(boundary(m1).is_zero());
  CHECK(boundary(m2).is_zero());
  Chain w;
  CHECK(homologous(m1, m2, &w));
  CHECK(boundary(w) == m1 - m2);
  // m1 is not null-homologous.
  CHECK_FALSE(homologous(m1, m1 * Rat(0)));
}

TEST_CASE("twisted RP2 cycle: local system transport in boundary") {
  OrderedComplex cx = rp2_6();
  auto fc = fundamental_class(cx, 2);
  // Damaging one coefficient breaks the cycle condition.
  Chain bad = fc.cycle;
  bad.coef.begin()->second += 1;
  CHECK_FALSE(boundary(bad).is_zero());
}

TEST_CASE("order complex enumeration and lookup") {
  // Poset: face poset of a triangle, indices in a linear extension.
  OrderedComplex tri = OrderedComplex::from_facets(3, {{0, 1, 2}});
  BarycentricData b = barycentric(tri);
  CHECK(b.cx.count(0) == 7);
  CHECK(b.cx.count(1) == 12);  // 6 vertex<edge, 3 edge<face, 3 vertex<face
  CHECK(b.cx.count(2) == 6);
  CHECK(b.last_vertex.valid());
}

TEST_CASE("sd is a twisted chain map and preserves fundamental classes") {
  for (bool use_rp2 : {false, true}) {
    OrderedComplex cx = use_rp2 ? rp2_6() : torus9();
    auto fc = fundamental_class(cx, 2);
    BarycentricData b = barycentric(cx);
    Chain sub = sd_chain(b, fc.cycle);
    CHECK(boundary(sub).is_zero());
    CHECK(sub.coef.size() == (std::size_t)(6 * cx.count(2)));
    // sd of the fundamental class is (+-) the fundamental class of Cx X.
    auto fcb = fundamental_class(b.cx, 2);
    bool plus = true, minus = true;
    REQUIRE(sub.coef.size() == fcb.cycle.coef.size());
    for (const auto& [i, v] : sub.coef) {
      Rat w = fcb.cycle.coef.at(i);
      if (v != w) plus = false;
      if (v != -w) minus = false;
    }
    // Only comparable when the systems match; for the twisted case compare
    // supports only.
    if (!use_rp2) CHECK((plus || minus));
    // Chain map on random chains.
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
      Chain c = random_chain(cx, 2, rng, fc.system);
      CHECK(boundary(sd_chain(b, c)) == sd_chain(b, boundary(c)));
    }
  }
}
