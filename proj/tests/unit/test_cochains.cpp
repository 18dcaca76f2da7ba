#include "doctest.h"

#include "tatekit/cochains.hpp"

using namespace tatekit;

namespace {

FinGroup cyclic(unsigned n) {
  Perm p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return group_from_permutations(n, {p});
}
FinGroup s3() { return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

// the extension 0 -> Z -> Z -> C_n -> 0: a_{i,j} = 1 if i+j >= n
Cocycle2Table standard_cyclic_cocycle(const FinGroup& g) {
  unsigned n = g.order();
  Cocycle2Table t = Cocycle2Table::zeros(n, 1);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i + j >= n) t.at(i, j)[0] = 1;
  return t;
}

}  // namespace

TEST_CASE("restriction of cocycle tables") {
  FinGroup g = cyclic(4);
  GModule z = GModule::trivial(g, 1);
  Cocycle2Table a = standard_cyclic_cocycle(g);
  REQUIRE(is_cocycle2(z, a));

  SUBCASE("restriction to the whole group is the identity") {
    SubgroupView v = subgroup_view(Subgroup::full(g));
    Cocycle2Table r = restrict_cocycle2(a, v);
    GModule zv = z.restricted_to(v);
    auto h2 = tate_cohomology(zv, 2);
    CHECK(h2.group().elements_equal(h2.class_of_cocycle2(r),
                                    tate_cohomology(z, 2).class_of_cocycle2(a)));
  }
  SUBCASE("generator of H^2(C4,Z) restricts to the generator of H^2(C2,Z)") {
    Subgroup c2 = Subgroup::generated_by(g, {g.mul(g.generators()[0], g.generators()[0])});
    REQUIRE(c2.order() == 2);
    SubgroupView v = subgroup_view(c2);
    GModule zv = z.restricted_to(v);
    Cocycle2Table r = restrict_cocycle2(a, v);
    auto h2 = tate_cohomology(zv, 2);
    REQUIRE(h2.group().torsion() == IntVec{2});
    CHECK(!h2.group().element_is_zero(h2.class_of_cocycle2(r)));
  }
  SUBCASE("restriction of a coboundary is a coboundary") {
    GModule m = permutation_module(GSet::regular(g));
    std::vector<IntVec> chain(g.order() - 1, IntVec(4));
    chain[1][2] = 3;
    Cocycle2Table cb = coboundary2(m, chain);
    Subgroup c2 = Subgroup::generated_by(g, {g.mul(g.generators()[0], g.generators()[0])});
    SubgroupView v = subgroup_view(c2);
    GModule mv = m.restricted_to(v);
    CHECK(cobounding_cochain_2(mv, restrict_cocycle2(cb, v)).has_value());
  }
}

TEST_CASE("corestriction: Cor . Res = index on H^1 and H^2") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::from_generator_actions(g, 3, {{1, 0, 2}, {1, 2, 0}}));
  std::vector<Subgroup> subs = all_subgroups(g);
  for (const Subgroup& sub : subs) {
    SubgroupView v = subgroup_view(sub);
    unsigned idx = sub.index();
    {
      auto h1 = tate_cohomology(m, 1);
      for (std::size_t i = 0; i < h1.group().ambient_rank(); ++i) {
        IntVec cls = unit_vec(h1.group().ambient_rank(), i);
        Cocycle1Table z = h1.cocycle1_representative(cls);
        Cocycle1Table back = corestrict_cocycle1(m, sub, v, restrict_cocycle1(z, v));
        IntVec got = h1.class_of_cocycle1(back);
        IntVec want(cls.size());
        for (std::size_t t = 0; t < cls.size(); ++t) want[t] = Int(idx) * cls[t];
        CHECK(h1.group().elements_equal(got, want));
      }
    }
    {
      auto h2 = tate_cohomology(m, 2);
      for (std::size_t i = 0; i < h2.group().ambient_rank(); ++i) {
        IntVec cls = unit_vec(h2.group().ambient_rank(), i);
        Cocycle2Table z = h2.cocycle2_representative(cls);
        Cocycle2Table back = corestrict_cocycle2(m, sub, v, restrict_cocycle2(z, v));
        IntVec got = h2.class_of_cocycle2(back);
        IntVec want(cls.size());
        for (std::size_t t = 0; t < cls.size(); ++t) want[t] = Int(idx) * cls[t];
        CHECK(h2.group().elements_equal(got, want));
      }
    }
  }
}

TEST_CASE("Res . Cor is the Hochschild-Serre norm for normal subgroups") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::regular(g));
  Subgroup a3 = Subgroup::generated_by(g, {g.generators()[1]});
  REQUIRE(a3.is_normal());
  SubgroupView v = subgroup_view(a3);
  GModule mv = m.restricted_to(v);
  auto h1sub = tate_cohomology(mv, 1);
  std::vector<unsigned> qreps = a3.coset_representatives(Subgroup::Side::Left);
  for (std::size_t i = 0; i < h1sub.group().ambient_rank(); ++i) {
    Cocycle1Table z = h1sub.cocycle1_representative(unit_vec(h1sub.group().ambient_rank(), i));
    Cocycle1Table up = corestrict_cocycle1(m, a3, v, z);
    Cocycle1Table down = restrict_cocycle1(up, v);
    // Hochschild-Serre norm: sum over coset representatives of the action
    IntVec norm_cls(h1sub.group().ambient_rank());
    for (unsigned x : qreps) {
      Cocycle1Table moved = hochschild_serre_1(m, a3, v, x, z);
      norm_cls = norm_cls + h1sub.class_of_cocycle1(moved);
    }
    CHECK(h1sub.group().elements_equal(h1sub.class_of_cocycle1(down), norm_cls));
  }
}

TEST_CASE("corestriction factors through Hochschild-Serre coinvariants") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::regular(g));
  Subgroup a3 = Subgroup::generated_by(g, {g.generators()[1]});
  SubgroupView v = subgroup_view(a3);
  GModule mv = m.restricted_to(v);
  auto h1 = tate_cohomology(m, 1);
  auto h1sub = tate_cohomology(mv, 1);
  for (std::size_t i = 0; i < h1sub.group().ambient_rank(); ++i) {
    Cocycle1Table z = h1sub.cocycle1_representative(unit_vec(h1sub.group().ambient_rank(), i));
    for (unsigned x = 0; x < g.order(); ++x) {
      Cocycle1Table zx = hochschild_serre_1(m, a3, v, x, z);
      IntVec c1 = h1.class_of_cocycle1(corestrict_cocycle1(m, a3, v, z));
      IntVec c2 = h1.class_of_cocycle1(corestrict_cocycle1(m, a3, v, zx));
      CHECK(h1.group().elements_equal(c1, c2));
    }
  }
}

TEST_CASE("Hochschild-Serre action: elements of K act trivially on classes") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::regular(g));
  Subgroup a3 = Subgroup::generated_by(g, {g.generators()[1]});
  SubgroupView v = subgroup_view(a3);
  GModule mv = m.restricted_to(v);
  auto h1sub = tate_cohomology(mv, 1);
  for (std::size_t i = 0; i < h1sub.group().ambient_rank(); ++i) {
    Cocycle1Table z = h1sub.cocycle1_representative(unit_vec(h1sub.group().ambient_rank(), i));
    for (unsigned kk : a3.members()) {
      Cocycle1Table zx = hochschild_serre_1(m, a3, v, kk, z);
      CHECK(h1sub.group().elements_equal(h1sub.class_of_cocycle1(zx), h1sub.class_of_cocycle1(z)));
    }
  }
  Subgroup c2 = Subgroup::generated_by(g, {g.generators()[0]});
  SubgroupView v2 = subgroup_view(c2);
  Cocycle1Table dummy;
  dummy.val.assign(2, IntVec(m.ambient_rank()));
  CHECK_THROWS_AS(hochschild_serre_1(m, c2, v2, g.generators()[1], dummy), NotNormal);
}

TEST_CASE("cup of the fundamental class with a norm-zero element") {
  FinGroup g = cyclic(2);
  GModule z = GModule::trivial(g, 1);
  GModule sgn = GModule::from_generator_matrices(g, PresentedAbGroup::free_group(1), {IntMatrix{{-1}}});
  Cocycle2Table a = standard_cyclic_cocycle(g);
  TensorModule zs = tensor_module(z, sgn);
  BilinearPairing p = tensor_pairing(zs, z, sgn);

  SUBCASE("nonzero class lands in H^1(C2, sign) = Z/2") {
    IntVec b{1};  // generator of ker N on the sign module
    Cocycle1Table c = cup_2_minus1(p, a, b);
    auto h1 = tate_cohomology(zs.mod, 1);
    REQUIRE(h1.group().torsion() == IntVec{2});
    CHECK(!h1.group().element_is_zero(h1.class_of_cocycle1(c)));
    Cocycle1Table d = cup_2_minus1_alt(p, a, b);
    CHECK(h1.group().elements_equal(h1.class_of_cocycle1(c), h1.class_of_cocycle1(d)));
  }
  SUBCASE("b = 0 gives the zero cocycle") {
    Cocycle1Table c = cup_2_minus1(p, a, IntVec{0});
    for (const auto& vv : c.val) CHECK(is_zero(vv));
  }
  SUBCASE("coboundary a gives a coboundary") {
    std::vector<IntVec> chain = {IntVec{5}};
    Cocycle2Table cb = coboundary2(z, chain);
    Cocycle1Table c = cup_2_minus1(p, cb, IntVec{1});
    CHECK(cobounding_element_1(zs.mod, c).has_value());
  }
  SUBCASE("norm-nonzero b is rejected") {
    TensorModule zz = tensor_module(z, z);
    BilinearPairing pz = tensor_pairing(zz, z, z);
    CHECK_THROWS_AS(cup_2_minus1(pz, a, IntVec{1}), NormNotZero);
  }
}

TEST_CASE("the two cup formulas agree on random data") {
  FinGroup g = s3();
  GModule m = permutation_module(GSet::from_generator_actions(g, 3, {{1, 0, 2}, {1, 2, 0}}));
  GModule z = GModule::trivial(g, 1);
  auto h2 = tate_cohomology(z, 2);
  TensorModule t = tensor_module(z, m);
  BilinearPairing p = tensor_pairing(t, z, m);
  auto h1t = tate_cohomology(t.mod, 1);
  auto hm1 = tate_cohomology(m, -1);
  for (std::size_t ai = 0; ai < h2.group().ambient_rank(); ++ai) {
    Cocycle2Table a = h2.cocycle2_representative(unit_vec(h2.group().ambient_rank(), ai));
    for (std::size_t bi = 0; bi < hm1.group().ambient_rank(); ++bi) {
      IntVec b = hm1.norm_kernel_representative(unit_vec(hm1.group().ambient_rank(), bi));
      Cocycle1Table c = cup_2_minus1(p, a, b);
      Cocycle1Table d = cup_2_minus1_alt(p, a, b);
      CHECK(h1t.group().elements_equal(h1t.class_of_cocycle1(c), h1t.class_of_cocycle1(d)));
    }
  }
}

TEST_CASE("corestriction of a homomorphism to the extension") {
  FinGroup g = cyclic(3);
  GModule a = GModule::trivial(g, 1);
  ExtensionData e = make_extension(a, standard_cyclic_cocycle(g));
  GModule m = permutation_module(GSet::regular(g));
  IntMatrix mu(3, 1);
  mu(0, 0) = 1;
  mu(2, 0) = -4;
  ExtCocycle1 out = corestrict_hom_to_extension(e, m, mu);
  CHECK(is_ext_cocycle1(e, m, out));
}

TEST_CASE("extension morphisms and pullback") {
  FinGroup g = cyclic(2);
  GModule a = GModule::trivial(g, 1);
  ExtensionData e = make_extension(a, standard_cyclic_cocycle(g));

  SUBCASE("identity morphism") {
    ExtensionMorphism mor = extension_morphism(e, e, IntMatrix::identity(1));
    GModule m = GModule::trivial(g, 1);
    ExtCocycle1 z;
    z.hom_part = IntMatrix{{14}};
    z.section.assign(2, IntVec(1));
    z.section[1] = IntVec{7};  // m_s + s m_s - m_1 = 14 = mu(a_{s,s})
    REQUIRE(is_ext_cocycle1(e, m, z));
    ExtCocycle1 back = pullback_ext_cocycle(mor, e, e, m, z);
    CHECK(is_ext_cocycle1(e, m, back));
    CHECK(back.hom_part == z.hom_part);
  }
  SUBCASE("cohomologous cocycles admit a morphism with the cobounding twist") {
    Cocycle2Table shifted = standard_cyclic_cocycle(g);
    std::vector<IntVec> chain = {IntVec{3}};
    Cocycle2Table cb = coboundary2(a, chain);
    for (unsigned s = 0; s < 2; ++s)
      for (unsigned t = 0; t < 2; ++t) shifted.at(s, t) = shifted.at(s, t) + cb.at(s, t);
    ExtensionData e2 = make_extension(a, shifted);
    ExtensionMorphism mor = extension_morphism(e2, e, IntMatrix::identity(1));
    CHECK(mor.delta[1] == IntVec{3});
  }
  SUBCASE("class mismatch is detected") {
    ExtensionData split = split_extension(a);
    CHECK_THROWS_AS(extension_morphism(split, e, IntMatrix::identity(1)), ClassMismatch);
  }
}

TEST_CASE("Shapiro composed with corestriction and the section is the identity") {
  FinGroup g = s3();
  for (const Subgroup& sub : all_subgroups(g)) {
    if (sub.order() == 1 || sub.order() == g.order()) continue;
    SubgroupView v = subgroup_view(sub);
    GModule m0 = permutation_module(GSet::regular(v.group));
    Coinduction r = coinduction(g, v, m0);
    for (int deg : {1, 2}) {
      auto hsub = tate_cohomology(m0, deg);
      for (std::size_t i = 0; i < hsub.group().ambient_rank(); ++i) {
        IntVec cls = unit_vec(hsub.group().ambient_rank(), i);
        if (deg == 1) {
          Cocycle1Table z = hsub.cocycle1_representative(cls);
          Cocycle1Table jz;
          jz.val.resize(v.group.order());
          for (unsigned e = 0; e < v.group.order(); ++e) jz.val[e] = r.section * z.val[e];
          Cocycle1Table up = corestrict_cocycle1(r.mod, sub, v, jz);
          Cocycle1Table back = shapiro_cocycle1(r, v, up);
          CHECK(hsub.group().elements_equal(hsub.class_of_cocycle1(back), cls));
        } else {
          Cocycle2Table z = hsub.cocycle2_representative(cls);
          Cocycle2Table jz = Cocycle2Table::zeros(v.group.order(), r.mod.ambient_rank());
          for (unsigned s = 0; s < v.group.order(); ++s)
            for (unsigned t = 0; t < v.group.order(); ++t) jz.at(s, t) = r.section * z.at(s, t);
          Cocycle2Table up = corestrict_cocycle2(r.mod, sub, v, jz);
          Cocycle2Table back = shapiro_cocycle2(r, v, up);
          CHECK(hsub.group().elements_equal(hsub.class_of_cocycle2(back), cls));
        }
      }
    }
  }
}
