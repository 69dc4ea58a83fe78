#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "voganish/agroup.hpp"
#include "voganish/geometry.hpp"

using namespace voganish;

namespace {

GroupInstance so3_like() {
  GroupInstance g;
  g.name = "so3";
  g.family = Family::GL;
  g.dims = {1, 1};
  g.defining_rank = 2;
  g.constraints = {{{1, 1}, 1}};  // inside SL(2): t1*t2 = 1
  return g;
}

GroupInstance so5_regular() {
  GroupInstance g;
  g.name = "so5_regular";
  g.family = Family::Sp;
  g.dims = {1, 1};
  g.end = EndFactor::Sym2;
  g.defining_rank = 4;
  return g;
}

GroupInstance so5_singular() {
  GroupInstance g;
  g.name = "so5_singular";
  g.family = Family::Sp;
  g.dims = {2};
  g.end = EndFactor::Sym2;
  g.defining_rank = 4;
  return g;
}

GroupInstance so7() {
  GroupInstance g;
  g.name = "so7";
  g.family = Family::Sp;
  g.dims = {1, 2};
  g.end = EndFactor::Sym2;
  g.defining_rank = 6;
  return g;
}

GroupInstance pgl4_reduced() {
  GroupInstance g;
  g.name = "pgl4";
  g.family = Family::GL;
  g.dims = {1, 1};
  g.defining_rank = 2;
  g.constraints = {{{1, 1}, 2}};  // (t1*t2)^2 = 1
  return g;
}

std::multiset<int> dims_of(const Geometry& g) {
  std::multiset<int> out;
  for (const auto& o : g.orbits()) out.insert(o.dim);
  return out;
}

}  // namespace

TEST_CASE("gl chain dimensions and orbit counts") {
  Geometry g(so3_like());
  CHECK(g.variety().dim() == 1);
  CHECK(g.num_orbits() == 2);
  CHECK(dims_of(g) == std::multiset<int>{0, 1});
}

TEST_CASE("so5 regular: four orbits of dims 0,1,1,2") {
  Geometry g(so5_regular());
  CHECK(g.variety().dim() == 2);
  CHECK(g.num_orbits() == 4);
  CHECK(dims_of(g) == std::multiset<int>{0, 1, 1, 2});
}

TEST_CASE("so5 singular: three orbits of dims 0,2,3") {
  Geometry g(so5_singular());
  CHECK(g.variety().dim() == 3);
  CHECK(g.num_orbits() == 3);
  CHECK(dims_of(g) == std::multiset<int>{0, 2, 3});
}

TEST_CASE("so7: eight orbits with the recorded dimensions") {
  Geometry g(so7());
  CHECK(g.variety().dim() == 5);
  CHECK(g.num_orbits() == 8);
  CHECK(dims_of(g) == std::multiset<int>{0, 2, 2, 3, 3, 4, 4, 5});
}

TEST_CASE("so7 duality pairs dims (0,5),(2,3),(2,4),(3,2),(3,4),(4,3),(4,2),(5,0)") {
  Geometry g(so7());
  std::multiset<std::pair<int, int>> pairs, want = {{0, 5}, {2, 3}, {2, 4}, {3, 2},
                                                    {3, 4}, {4, 3}, {4, 2}, {5, 0}};
  std::multiset<int> eccs, want_eccs = {0, 0, 1, 0, 2, 2, 1, 0};
  for (const auto& o : g.orbits()) {
    auto dual = g.dual_orbit(o.label, 42);
    pairs.insert({o.dim, g.orbit_dimension(dual)});
    eccs.insert(o.dim + g.orbit_dimension(dual) - g.variety().dim());
  }
  CHECK(pairs == want);
  CHECK(eccs == want_eccs);
}

TEST_CASE("duality is an involution and conormal fibers have complementary dim") {
  for (auto spec : {so5_regular(), so5_singular(), so7()}) {
    Geometry g(spec);
    for (const auto& o : g.orbits()) {
      auto dual = g.dual_orbit(o.label, 7);
      auto back = g.dual_orbit(dual, 7);
      CHECK(back == o.label);
      auto fiber = g.conormal_fiber(o.representative);
      CHECK(static_cast<int>(fiber.size()) == g.variety().dim() - o.dim);
    }
  }
}

TEST_CASE("so3-like component groups") {
  Geometry g(so3_like());
  // Open orbit: stabilizer {t = +-1} inside SL(2), pi_0 = Z/2.
  const Orbit& open = g.orbit(g.open_orbit());
  ComponentGroupEngine eng(g, open.representative, nullptr);
  CHECK(eng.size() == 2);
  // Zero orbit: stabilizer is all of H = GL(1), connected.
  const Orbit& zero = g.orbit(g.zero_orbit());
  ComponentGroupEngine ez(g, zero.representative, nullptr);
  CHECK(ez.size() == 1);
}

TEST_CASE("pgl4 reduced component groups: mu2 at zero, mu4 at open") {
  Geometry g(pgl4_reduced());
  const Orbit& zero = g.orbit(g.zero_orbit());
  ComponentGroupEngine ez(g, zero.representative, nullptr);
  CHECK(ez.size() == 2);
  const Orbit& open = g.orbit(g.open_orbit());
  ComponentGroupEngine eo(g, open.representative, nullptr);
  CHECK(eo.size() == 4);
  CHECK(eo.internal_orders() == std::vector<int>{4});
}

TEST_CASE("so5 singular component groups incl. pi_0(O(2)) = Z/2 at the open orbit") {
  Geometry g(so5_singular());
  for (const auto& o : g.orbits()) {
    ComponentGroupEngine eng(g, o.representative, nullptr);
    if (o.dim == 0)
      CHECK(eng.size() == 1);
    else
      CHECK(eng.size() == 2);
  }
  // Microlocal group at the middle stratum is (Z/2)^2.
  for (const auto& o : g.orbits()) {
    if (o.dim != 2) continue;
    Point xi = g.strongly_regular_covector(o.label, 11);
    ComponentGroupEngine eng(g, o.representative, &xi);
    CHECK(eng.size() == 4);
    CHECK(eng.internal_orders() == std::vector<int>{2, 2});
  }
}

TEST_CASE("so7 component groups match the recorded table") {
  Geometry g(so7());
  std::map<int, std::vector<long>> a_sizes;  // dim -> sizes
  for (const auto& o : g.orbits()) {
    ComponentGroupEngine eng(g, o.representative, nullptr);
    a_sizes[o.dim].push_back(eng.size());
    Point xi = g.strongly_regular_covector(o.label, 5);
    ComponentGroupEngine mic(g, o.representative, &xi);
    // Microlocal groups: S[2] (order 4) except the two Z(G)-strata of dims 3,4
    // (the tensor-type parameters psi_4, psi_5).
    CHECK((mic.size() == 4 || mic.size() == 2));
  }
  CHECK(a_sizes[0] == std::vector<long>{1});
  CHECK(a_sizes[5] == std::vector<long>{4});
}

TEST_CASE("fq census matches enumeration for gl chains") {
  GroupInstance spec;
  spec.name = "gl_111";
  spec.dims = {1, 1, 1};
  Geometry g(spec);
  for (int q : {2, 3}) {
    auto census = g.fq_orbit_census(q);
    CHECK(census.size() == static_cast<size_t>(g.num_orbits()));
    long total = 0;
    for (const auto& o : g.orbits()) {
      auto it = census.find(o.label.key());
      REQUIRE(it != census.end());
      total += it->second;
    }
    long expect = 1;
    for (int e = 0; e < g.variety().dim(); ++e) expect *= q;
    CHECK(total == expect);
  }
}

TEST_CASE("fq census matches enumeration for self-dual instances") {
  for (auto spec : {so5_regular(), so5_singular(), so7()}) {
    Geometry g(spec);
    auto census = g.fq_orbit_census(3);
    CHECK(census.size() == static_cast<size_t>(g.num_orbits()));
    for (const auto& o : g.orbits()) CHECK(census.count(o.label.key()) == 1);
  }
}

TEST_CASE("closure covers carry degeneration witnesses on the acceptance domain") {
  GroupInstance spec;
  spec.name = "gl_22";
  spec.dims = {2, 2};
  Geometry g(spec);
  for (const auto& cov : g.covers_with_witnesses(3)) CHECK(cov.witnessed);
}

TEST_CASE("so7 closure comparisons and representative entries") {
  Geometry g(so7());
  // Named comparisons: the dim-2 chain stratum lies below the rank-one open
  // boundary stratum of dim 4 but not below the dim-4 full-rank one.
  OrbitLabel c1, c3, c5, c6;
  c1.r = {{1, 0, 0}, {0, 0}, {1}};
  c3.r = {{0, 0, 0}, {2, 0}, {0}};
  c5.r = {{1, 1, 0}, {2, 1}, {1}};
  c6.r = {{1, 1, 1}, {1, 1}, {1}};
  CHECK(g.closure_leq(c1, c6));
  CHECK(g.closure_leq(c1, c5));
  bool c1_le_c3 = g.closure_leq(c1, c3);
  bool c3_le_c1 = g.closure_leq(c3, c1);
  CHECK_FALSE(c1_le_c3);
  CHECK_FALSE(c3_le_c1);
  // Representatives are deterministic with entries in {0, +-1}.
  for (const auto& o : g.orbits()) {
    Point again = g.representative(o.label);
    CHECK(again == o.representative);
    for (const auto& m : o.representative.m)
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
          const QI& q = m.at(r, c);
          bool ok = q.is_zero() || q == QI(1) || q == QI(-1);
          CHECK(ok);
        }
    CHECK(g.label_of(o.representative) == o.label);
  }
}

TEST_CASE("oversized self-dual instances are rejected before enumeration") {
  GroupInstance spec;
  spec.name = "huge";
  spec.family = Family::Sp;
  spec.dims = {4, 4};
  spec.end = EndFactor::Sym2;
  CHECK_THROWS_WITH_AS(Geometry{spec}, doctest::Contains("supported size"), std::runtime_error);
}
