#pragma once

#include "tatekit/global_model.hpp"

namespace tatekit {

/// A torus modeled by its cocharacter lattice over the model's group.
struct TorusData {
  GlobalModel model;
  GModule m;  // torsion-free
};
TorusData make_torus_data(GlobalModel model, GModule m);

/// B_i(F, T) = (M (x) X_i)_G at the fixed level K.
struct BGroup {
  int index = 3;
  TensorModule mxi;          // M (x) X_i
  PresentedAbGroup group;    // the coinvariants, in ambient coordinates
};
BGroup bft_compute(const TorusData& t, int i);

/// The Newton map: coinvariants -> invariants induced by the norm.
struct NewtonData {
  BGroup b;
  InvariantsResult inv;
  IntMatrix coinv_to_inv;  // k x amb
};
NewtonData newton_norm(const TorusData& t, int i);

/// Localization at a place of F in S: (M (x) X3)_G -> M_{G_v}, the class of
/// sum_w m_w w going to sum over G_v \ G of sigma(m_{sigma^{-1} v}).
struct Localization {
  LocalModelData local;
  PresentedAbGroup target;  // M_{G_v}
  IntMatrix matrix;         // amb(M (x) X3) -> amb(M)
};
Localization localize(const TorusData& t, unsigned s_orbit_position);
/// Same map for an arbitrary coefficient module (used by the reductive layer).
Localization localize_module(const GlobalModel& model, const GModule& mod,
                             unsigned s_orbit_position);

struct TotalLocalization {
  BGroup b3;
  std::vector<Localization> components;  // one per place of F in S
  PresentedAbGroup middle;               // (+)_u M_{G_v}
  IntMatrix loc_matrix;                  // amb(M (x) X3) -> (+) amb(M)
  IntMatrix sum_matrix;                  // (+) amb(M) -> amb(M), into M_G
  PresentedAbGroup mg;                   // M_G
  bool exact = false;                    // (M(x)X3)_G -> (+) M_{G_v} -> M_G -> 0
  /// Accepts a tuple iff it dies in M_G (the image criterion).
  bool image_criterion(const std::vector<IntVec>& tuple) const;
};
TotalLocalization total_localization(const TorusData& t);

/// Inflation along a tower: the map id (x) j_i on coinvariants, with the
/// section inverse induced by gamma.
struct Inflation {
  BGroup upper, lower;
  IntMatrix matrix;       // amb(M (x) X_i(L)) -> amb(M (x) X_i(K))
  IntMatrix inverse;      // amb(M (x) X_i(K)) -> amb(M (x) X_i(L))
  bool bijective = false;
  bool norm_square_commutes = false;  // N_{L/F} = (id (x) p) N_{K/F} (id (x) j)
};
Inflation inflate(const TowerModel& tower, const TowerMaps& maps, const GModule& m_lower, int i);

/// Corestriction and restriction through a subgroup level.
struct CorRes {
  BGroup upper;              // B_i over the subgroup (intermediate field E)
  BGroup lower;              // B_i over the full group (base field F)
  IntMatrix cor;             // amb -> amb: induced by the identity on M (x) X_i
  IntMatrix res;             // amb -> amb: the coset-averaging map
};
CorRes cor_res(const TorusData& t, const Subgroup& sub, int i);

/// Shapiro: B_i(F, R(M0)) = B_i(E, M0) with explicit mutually inverse maps.
struct ShapiroBft {
  Coinduction coind;
  TensorModule big;          // R(M0) (x) X_i over G
  TensorModule small;        // M0 (x) X_i|_{G'} over G'
  PresentedAbGroup big_coinv, small_coinv;
  IntMatrix forward;         // amb(big) -> amb(small)
  IntMatrix backward;        // amb(small) -> amb(big)
  bool mutually_inverse = false;
};
ShapiroBft shapiro_bft(const GlobalModel& model, const Subgroup& sub, const GModule& m0, int i);

/// The reductive bookkeeping layer: A = (Lambda (x) X3)_G, the norm N, the
/// subgroup A0 = N^{-1}(central part), and per-place localizations.
struct ReductiveA {
  TensorModule lx3;              // Lambda (x) X3
  PresentedAbGroup a_group;      // A
  InvariantsResult inv;          // (Lambda (x) X3)^G
  IntMatrix n_coinv_to_inv;      // the norm in invariant coordinates
  IntMatrix a0_lattice;          // ambient generators of A0
  PresentedAbGroup a0_group;     // A0 as an abstract group
  PresentedAbGroup central_inv;  // (Lambda_C (x) X3)^G
  IntMatrix iota_inv_matrix;     // central invariants -> invariants (coords)
  bool iota_inv_injective = false;
  std::vector<Localization> local_a;  // localization maps to Lambda_{G_v}
};
ReductiveA reductive_a(const GlobalModel& model, const GModule& lambda, const GModule& lambda_c,
                       const IntMatrix& iota);

}  // namespace tatekit
