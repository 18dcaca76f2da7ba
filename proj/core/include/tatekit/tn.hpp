#pragma once

#include "tatekit/h1y.hpp"

namespace tatekit {

/// (X, A, alpha) with X torsion-free and alpha a 2-cocycle valued in the
/// presented Hom(X, A) module.
struct TNTriple {
  GModule x;
  GModule a;
  HomModule hom_xa;
  Cocycle2Table alpha;
};
TNTriple make_tn_triple(GModule x, GModule a, Cocycle2Table alpha);

struct TNVerdict {
  int lo = 0, hi = 0;
  std::vector<std::vector<unsigned>> subgroup_members;
  std::vector<std::vector<bool>> weak_tn;  // [subgroup][degree - lo]
  std::vector<bool> rigid;
  bool all_weak() const {
    for (const auto& row : weak_tn)
      for (bool b : row)
        if (!b) return false;
    return true;
  }
  bool all_rigid() const {
    for (bool b : rigid)
      if (!b) return false;
    return true;
  }
  bool window_certified_tn() const { return all_weak() && all_rigid(); }
};

/// Cup with Res(alpha) as a map H^r(G', X) -> H^{r+2}(G', A) for every
/// subgroup and every degree in [lo, hi]; bijectivity per slot.
TNVerdict verify_weak_tn(const TNTriple& t, int lo, int hi);

/// H^1(G', Hom(X,A)) = 0 per subgroup.
std::vector<bool> verify_rigidity(const TNTriple& t);

/// Whether cup with alpha is bijective H^r(G,Hom(M,X)) -> H^{r+2}(G,Hom(M,A))
/// across the window.
bool class_c_membership(const TNTriple& t, const GModule& m, int lo, int hi);

/// Cup-with-alpha as an explicit matrix between presented Tate groups,
/// computed after shifting both sides into the base degrees:  `eval` turns a
/// kernel-coordinate vector and a V-ambient vector into a W-ambient vector.
struct CupShiftResult {
  TateGroup source;  // presents H^degree(G, V)
  TateGroup target;  // presents H^{degree+2}(G, W)
  IntMatrix matrix;
  bool bijective = false;
};
CupShiftResult cup_shift_matrix(const GModule& cmod, const Cocycle2Table& alpha, const GModule& v,
                                const GModule& w,
                                const std::function<IntMatrix(const IntVec&)>& eval_matrix,
                                int degree);

/// The H^1_alg context of a triple for a torsion-free M: extension with
/// kernel Hom(X,A) and class alpha, coefficients M (x) A, Y = M (x) X and
/// the tautological xi.
struct TNAlgContext {
  H1YContext ctx;
  TensorModule y;   // M (x) X
  TensorModule ma;  // M (x) A
};
TNAlgContext tn_h1alg_context(const TNTriple& t, const GModule& m);

/// rho for a morphism (b, a) : (X2,A2,alpha2) -> (X1,A1,alpha1) of triples
/// and torsion-free M, built through an auxiliary extension with kernel
/// Hom(X2, A1).  Optional 1-cocycle twists vary the non-canonical lifts.
struct TNRho {
  TNAlgContext alg2, alg1;
  H1YGroup h2, h1;
  IntMatrix rho;        // H^1_alg(E2, M (x) A2) -> H^1_alg(E1, M (x) A1)
  IntMatrix idb_coinv;  // amb(M (x) X2) -> amb(M (x) X1), id (x) b
  bool c_square_commutes = false;
};
TNRho triple_morphism_rho(const TNTriple& t2, const TNTriple& t1, const IntMatrix& b,
                          const IntMatrix& a, const GModule& m,
                          const Cocycle1Table* twist_a = nullptr,
                          const Cocycle1Table* twist_b = nullptr);

/// The standard cyclic-model triple: X = A = Z trivial over C_n, alpha the
/// class of the extension 0 -> Z -> Z -> C_n -> 0.
TNTriple cyclic_model_triple(const FinGroup& g);
Cocycle2Table standard_cyclic_cocycle_table(const FinGroup& g);

}  // namespace tatekit
