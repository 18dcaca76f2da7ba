#include "doctest.h"

#include "tatekit/tate.hpp"

using namespace tatekit;

namespace {
FinGroup cyclic(unsigned n) {
  Perm p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return group_from_permutations(n, {p});
}
FinGroup s3() { return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }
FinGroup v4() { return group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}); }
}  // namespace

TEST_CASE("H^-1(G, Z) vanishes") {
  for (auto g : {cyclic(2), cyclic(3), cyclic(6), s3(), v4()}) {
    GModule z = GModule::trivial(g, 1);
    CHECK(tate_cohomology(z, -1).group().is_trivial());
  }
}

TEST_CASE("H^0(C_n, Z) = Z/n") {
  for (unsigned n : {2u, 3u, 4u, 5u, 6u}) {
    GModule z = GModule::trivial(cyclic(n), 1);
    auto h0 = tate_cohomology(z, 0);
    REQUIRE(h0.group().torsion().size() == 1);
    CHECK(h0.group().torsion()[0] == n);
  }
}

TEST_CASE("H^0(C2, Z[three places]) = Z/2") {
  FinGroup g = cyclic(2);
  GSet x = GSet::from_generator_actions(g, 3, {{1, 0, 2}});
  auto h0 = tate_cohomology(permutation_module(x), 0);
  CHECK(h0.group().torsion() == IntVec{2});
  CHECK(h0.group().free_rank() == 0);
}

TEST_CASE("H^1(C_n, Z) = 0 and H^2(C_n, Z) = Z/n") {
  for (unsigned n : {2u, 3u, 4u}) {
    GModule z = GModule::trivial(cyclic(n), 1);
    CHECK(tate_cohomology(z, 1).group().is_trivial());
    auto h2 = tate_cohomology(z, 2);
    REQUIRE(h2.group().torsion().size() == 1);
    CHECK(h2.group().torsion()[0] == n);
  }
}

TEST_CASE("H^1(C2, sign) = Z/2") {
  FinGroup g = cyclic(2);
  GModule sgn = GModule::from_generator_matrices(g, PresentedAbGroup::free_group(1), {IntMatrix{{-1}}});
  auto h1 = tate_cohomology(sgn, 1);
  CHECK(h1.group().torsion() == IntVec{2});
  // representative is an honest cocycle
  Cocycle1Table z = h1.cocycle1_representative(unit_vec(h1.group().ambient_rank(), 0));
  CHECK(is_cocycle1(sgn, z));
}

TEST_CASE("cyclic oracle agrees with the engine across the window") {
  for (unsigned n : {2u, 3u, 4u, 6u}) {
    FinGroup g = cyclic(n);
    unsigned gen = g.generators()[0];
    std::vector<GModule> mods;
    mods.push_back(GModule::trivial(g, 1));
    mods.push_back(regular_module(g));
    Perm rot(n + 1);
    for (unsigned i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    rot[n] = n;
    mods.push_back(permutation_module(GSet::from_generator_actions(g, n + 1, {rot})));
    if (n == 2)
      mods.push_back(GModule::from_generator_matrices(g, PresentedAbGroup::free_group(1), {IntMatrix{{-1}}}));
    for (const GModule& m : mods)
      for (int r = -3; r <= 3; ++r) {
        auto engine = tate_cohomology(m, r);
        auto oracle = cyclic_tate_oracle(m, r, gen);
        CHECK_MESSAGE(engine.group().same_normal_form(oracle), "n=", n, " r=", r);
      }
  }
}

TEST_CASE("degree shifting consistency for a nonabelian group") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::from_generator_actions(g, 3, {{1, 0, 2}, {1, 2, 0}}));
  // H^r(S3, Z[S3/C2]): by Shapiro equals H^r(C2, Z): Z/2 in even degrees, 0 in odd
  for (int r = -3; r <= 3; ++r) {
    auto h = tate_cohomology(m, r);
    if (r % 2 == 0) {
      CHECK(h.group().torsion() == IntVec{2});
      CHECK(h.group().free_rank() == 0);
    } else {
      CHECK(h.group().is_trivial());
    }
  }
}

TEST_CASE("cocycle table codecs round trip") {
  FinGroup g = v4();
  GModule m = permutation_module(GSet::regular(g));
  for (int r : {1, 2}) {
    auto h = tate_cohomology(m, r);
    for (std::size_t i = 0; i < h.group().ambient_rank(); ++i) {
      IntVec cls = unit_vec(h.group().ambient_rank(), i);
      if (r == 1) {
        Cocycle1Table z = h.cocycle1_representative(cls);
        REQUIRE(is_cocycle1(m, z));
        IntVec back = h.class_of_cocycle1(z);
        CHECK(h.group().elements_equal(back, cls));
      } else {
        Cocycle2Table z = h.cocycle2_representative(cls);
        REQUIRE(is_cocycle2(m, z));
        IntVec back = h.class_of_cocycle2(z);
        CHECK(h.group().elements_equal(back, cls));
      }
    }
  }
}

TEST_CASE("coboundary solvers") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::regular(g));
  IntVec n0 = unit_vec(6, 2) + unit_vec(6, 4);
  Cocycle1Table cb = coboundary1(m, n0);
  auto sol = cobounding_element_1(m, cb);
  REQUIRE(sol.has_value());
  for (unsigned e = 0; e < g.order(); ++e)
    CHECK(m.underlying().elements_equal(cb.val[e], (m.action(e) * *sol) - *sol));

  std::vector<IntVec> chain(g.order() - 1, IntVec(6));
  chain[0][0] = 1;
  chain[2][3] = -2;
  Cocycle2Table cb2 = coboundary2(m, chain);
  CHECK(is_cocycle2(m, cb2));
  auto sol2 = cobounding_cochain_2(m, cb2);
  CHECK(sol2.has_value());
}

TEST_CASE("window is enforced") {
  GModule z = GModule::trivial(cyclic(2), 1);
  CHECK_THROWS_AS(tate_cohomology(z, 4), DegreeOutOfWindow);
  CHECK_THROWS_AS(tate_cohomology(z, 4, 9), WindowTooWide);
  CHECK(tate_cohomology(z, 4, 5).group().torsion() == IntVec{2});  // periodicity: H^4 = H^0
}
