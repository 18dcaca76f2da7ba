#pragma once

#include "tatekit/cochains.hpp"

namespace tatekit {

/// The data (E, M, Y, xi): an extension of G by abelian A, a G-module M on
/// which A acts trivially, a G-module Y and a G-map xi : Y -> Hom(A, M).
struct H1YContext {
  ExtensionData ext;
  GModule m;
  GModule y;
  HomModule hom_am;  // Hom(A, M)
  IntMatrix xi;      // amb(hom_am.mod) x amb(Y)

  /// xi(y) as an explicit matrix A -> M.
  IntMatrix mu_of(const IntVec& y_ambient) const;
};

/// Validates xi (throws InvalidXi) and prepares the Hom-module presentation.
H1YContext make_h1y_context(ExtensionData ext, GModule m, GModule y, IntMatrix xi);

/// H^1_Y(E, M) as a presented group, with the inflation-restriction data.
/// Elements are classes of pairs (y, m): y in the invariant lattice of Y and
/// m the section values of a 1-cocycle of E whose restriction to A is xi(y).
class H1YGroup {
public:
  PresentedAbGroup group;

  // companions
  TateGroup h1_gm;            // H^1(G, M)
  TateGroup h2_gm;            // H^2(G, M)
  InvariantsResult y_inv;     // invariant lattice of Y
  PresentedAbGroup yg_group;  // Y^G in basis coordinates
  PresentedAbGroup y_coinv;   // Y_G (ambient coordinates of Y)
  PresentedAbGroup h1_em;     // H^1(E, M) in its own pair coordinates

  // maps between the presented coordinate systems
  IntMatrix i_matrix;   // H^1(G,M) -> H^1_Y
  IntMatrix r_matrix;   // H^1_Y -> Y^G
  IntMatrix t_matrix;   // Y^G -> H^2(G,M), the transgression
  IntMatrix c_matrix;   // amb(Y) -> H^1_Y, factoring through Y_G
  IntMatrix pi_matrix;  // H^1_Y -> H^1(E,M)

  /// Class of an explicit pair; the section table is indexed by G with
  /// entry 0 zero.  Throws if the pair is not a cocycle.
  IntVec class_of_pair(const IntVec& y_ambient, const std::vector<IntVec>& section) const;
  struct Pair {
    IntVec y_ambient;
    std::vector<IntVec> section;
  };
  Pair representative(const IntVec& cls) const;

  /// Verify that a pair satisfies the twisted cocycle condition.
  bool pair_is_cocycle(const IntVec& y_ambient, const std::vector<IntVec>& section) const;

  friend H1YGroup h1y_compute(const H1YContext& ctx);
  friend H1YGroup h1y_compute_inner(const H1YContext& ctx, bool with_companion);

private:
  std::shared_ptr<const H1YContext> ctx_;
  IntMatrix pair_basis_;  // columns span the solution lattice over (u, w)
  std::shared_ptr<SnfSolver> pair_solver_;
  std::vector<IntMatrix> expand_;  // per group element: (u,w) -> section value
  std::size_t ky_ = 0;             // number of invariant-basis coordinates
};

H1YGroup h1y_compute(const H1YContext& ctx);

struct AbsBTVerdict {
  bool c_iso = false;
  bool cup_minus1_bijective = false;
  bool cup_0_injective = false;
  bool consistent() const { return c_iso == (cup_minus1_bijective && cup_0_injective); }
};
/// Both sides of the criterion, computed independently: c by presentation,
/// the cup maps by the explicit cochain formulas.
AbsBTVerdict absbt_criterion(const H1YContext& ctx, const H1YGroup& h);

/// Naturality in (M, Y, xi): f : M1 -> M2, g : Y1 -> Y2 with
/// xi2 . g = (f .) . xi1; the induced map of H^1_Y groups.  Throws
/// SquareDoesNotCommute.
IntMatrix h1y_psi(const H1YContext& c1, const H1YGroup& h1, const H1YContext& c2,
                  const H1YGroup& h2, const IntMatrix& f, const IntMatrix& g);

/// Naturality in E: pullback along a morphism of extensions E_from -> E_to
/// covering h : A_from -> A_to, where ctx_from has xi_from = (h .) . xi_to.
/// Returns the matrix H^1_Y(E_to, M) -> H^1_Y(E_from, M).
IntMatrix h1y_psi_prime(const H1YContext& ctx_to, const H1YGroup& h_to,
                        const H1YContext& ctx_from, const H1YGroup& h_from,
                        const ExtensionMorphism& mor);

/// Restriction to a subgroup: builds the restricted context and returns the
/// map of pair classes together with the coset-averaging map on ambient Y.
struct H1YRestriction {
  H1YContext ctx;
  H1YGroup group;
  IntMatrix res_matrix;  // H^1_Y(E, M) -> H^1_Y(E', M)
  IntMatrix averaging;   // amb(Y) -> amb(Y): y -> sum over G'\G of g y
};
H1YRestriction h1y_restrict(const H1YContext& ctx, const H1YGroup& h, const Subgroup& sub);

/// Inverse of an isomorphism between presented groups (solve per generator).
IntMatrix invert_presented_iso(const IntMatrix& f, const PresentedAbGroup& src,
                               const PresentedAbGroup& dst);

}  // namespace tatekit
