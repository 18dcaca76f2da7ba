#pragma once

#include <functional>

#include "tatekit/tate.hpp"

namespace tatekit {

/// Restriction of normalized cocycle tables to a subgroup.
Cocycle1Table restrict_cocycle1(const Cocycle1Table& z, const SubgroupView& h);
Cocycle2Table restrict_cocycle2(const Cocycle2Table& z, const SubgroupView& h);

/// Corestriction from a subgroup, via the homogeneous-cochain formula with
/// the retraction p(g) = g * rep(g)^{-1} built from right-coset
/// representatives.  `m` is the G-module of coefficients; the input table
/// lives over the subgroup (through `h`'s element indexing).
Cocycle1Table corestrict_cocycle1(const GModule& m, const Subgroup& sub, const SubgroupView& h,
                                  const Cocycle1Table& z);
Cocycle2Table corestrict_cocycle2(const GModule& m, const Subgroup& sub, const SubgroupView& h,
                                  const Cocycle2Table& z);

/// Hochschild-Serre action of x in G on cocycles of a normal subgroup K:
/// (x . c)(k_1, ..) = x c(x^{-1} k_1 x, ..).  Throws NotNormal.
Cocycle1Table hochschild_serre_1(const GModule& m, const Subgroup& k, const SubgroupView& h,
                                 unsigned x, const Cocycle1Table& z);
Cocycle2Table hochschild_serre_2(const GModule& m, const Subgroup& k, const SubgroupView& h,
                                 unsigned x, const Cocycle2Table& z);

/// A G-equivariant pairing lhs (x) rhs -> out given by explicit evaluation
/// on ambient vectors.
struct BilinearPairing {
  const GModule* lhs;
  const GModule* rhs;
  const GModule* out;
  std::function<IntVec(const IntVec&, const IntVec&)> eval;
};
BilinearPairing tensor_pairing(const TensorModule& t, const GModule& lhs, const GModule& rhs);

/// Cup product of a 2-cocycle with a (-1)-cocycle (an element killed by the
/// norm): c_sigma = sum_tau  a_{sigma,tau} . (sigma tau) b.  Throws
/// NormNotZero unless N b = 0 in rhs.
Cocycle1Table cup_2_minus1(const BilinearPairing& p, const Cocycle2Table& a, const IntVec& b);
/// The alternative representative d_sigma = sum_tau tau^{-1} a_{tau,sigma} . tau^{-1} b.
Cocycle1Table cup_2_minus1_alt(const BilinearPairing& p, const Cocycle2Table& a, const IntVec& b);
/// Cup with a 0-cocycle (an invariant vector): (a cup b)_{s,t} = a_{s,t} . (st) b.
Cocycle2Table cup_2_0(const BilinearPairing& p, const Cocycle2Table& a, const IntVec& b);

/// Extension 1 -> A -> E -> G -> 1 encoded by its kernel module and a
/// normalized 2-cocycle.
struct ExtensionData {
  GModule kernel;
  Cocycle2Table cocycle;
};
ExtensionData make_extension(GModule kernel, Cocycle2Table cocycle);  // validates
ExtensionData split_extension(GModule kernel);

/// 1-cocycle of E in a G-module M on which A acts trivially: a homomorphism
/// part on A and values on the canonical section.
struct ExtCocycle1 {
  IntMatrix hom_part;           // amb(M) x amb(A)
  std::vector<IntVec> section;  // indexed by G, section[0] = 0
};
bool is_ext_cocycle1(const ExtensionData& e, const GModule& m, const ExtCocycle1& z);

/// Corestriction Hom(A,M) = H^1(A,M) -> H^1(E,M):
/// b_{a s(sigma)} = (N_G mu)(a) + sum_tau tau^{-1} mu(a_{tau,sigma}).
ExtCocycle1 corestrict_hom_to_extension(const ExtensionData& e, const GModule& m, const IntMatrix& mu);

/// A morphism of extensions of G:  E_from -> E_to  covering h : A_from -> A_to,
/// with the section twist delta (d delta = h(alpha_from) - alpha_to).
struct ExtensionMorphism {
  IntMatrix h;
  std::vector<IntVec> delta;  // valued in A_to, indexed by G, delta[0] = 0
};
/// Finds a section twist, or throws: SquareDoesNotCommute if h is not a
/// G-map, ClassMismatch if the pushed-forward classes differ.
ExtensionMorphism extension_morphism(const ExtensionData& from, const ExtensionData& to,
                                     const IntMatrix& h);

/// Pullback of a 1-cocycle of E_to along a morphism E_from -> E_to.
ExtCocycle1 pullback_ext_cocycle(const ExtensionMorphism& mor, const ExtensionData& from,
                                 const ExtensionData& to, const GModule& m, const ExtCocycle1& z);

/// Shapiro maps for coinduced coefficients: restrict to the subgroup and
/// apply the adjunction epsilon.
Cocycle1Table shapiro_cocycle1(const Coinduction& r, const SubgroupView& h, const Cocycle1Table& z);
Cocycle2Table shapiro_cocycle2(const Coinduction& r, const SubgroupView& h, const Cocycle2Table& z);

}  // namespace tatekit
