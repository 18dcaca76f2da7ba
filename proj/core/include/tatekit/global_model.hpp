#pragma once

#include "tatekit/gmodule.hpp"

namespace tatekit {

/// A finite-data model of a Galois extension of global fields: the group,
/// its action on a set of places, and a distinguished set S of places of the
/// base field (orbits of the action).
struct GlobalModel {
  GSet places;                       // V_K
  std::vector<unsigned> s_orbits;    // orbit indices forming S
  std::vector<GSet::Orbit> orbits;   // all orbits, in canonical order
  GSet s_places;                     // the G-set S_K
  std::vector<unsigned> s_point_map; // S_K index -> V_K index

  const FinGroup& group() const { return places.group(); }
};
GlobalModel make_global_model(GSet places, std::vector<unsigned> s_orbits);

/// 0 -> X3 -> X2 -> X1 -> 0 with X2 = Z[S_K], X1 = Z, b the augmentation.
struct XSequence {
  GModule x3, x2, x1;
  IntMatrix b_prime;  // amb(X2) x amb(X3), the inclusion
  IntMatrix b;        // 1 x amb(X2), the augmentation
};
XSequence x_sequence(const GlobalModel& m);  // throws EmptyS

struct AdequacyVerdict {
  bool stabilizer_cover = false;  // {G_w : w in S_K} = {G_w : w in V_K}
  bool cyclic_cover = false;      // every cyclic subgroup is some G_w, w in S_K
};
AdequacyVerdict adequacy_check(const GlobalModel& m);

/// Coinvariant exactness of (X) holds iff the images of the G_v (v in S_K)
/// generate G^ab; both sides of that criterion.
struct CoinvariantExactness {
  bool exact = false;
  bool stabilizers_generate_gab = false;
};
CoinvariantExactness coinvariant_exactness(const GlobalModel& m);

/// A tower L / K / F: compatible surjections on groups and places.
struct TowerModel {
  GlobalModel upper;                       // L-level
  GlobalModel lower;                       // K-level
  std::vector<unsigned> group_surjection;  // G(L/F) -> G(K/F)
  std::vector<unsigned> place_surjection;  // V_L -> V_K
};
TowerModel make_tower(GlobalModel upper, GlobalModel lower, std::vector<unsigned> group_surjection,
                      std::vector<unsigned> place_surjection);  // throws InvalidTower

struct TowerMaps {
  XSequence xk, xl;
  Subgroup glk;                    // G(L/K), the kernel of the surjection
  IntMatrix p1, p2, p3;            // X_i(K) -> X_i(L)
  IntMatrix j1, j2, j3;            // X_i(L) -> X_i(K)
  // the induced maps X_i(L)_{G(L/K)} -> X_i(K) are the j_i; gamma_i is an
  // isomorphism iff j_i kills the G(L/K)-augmentation and is onto
  bool identities_hold = false;    // p j = N_{L/K}, j p = [L:K], gamma iso
};
TowerMaps tower_maps(const TowerModel& t);

struct LocalModelData {
  Subgroup gv;        // decomposition group of the chosen place above u
  unsigned place;     // index into S_K of the chosen place v
  IntMatrix lambda_v; // amb(X2) x 1
  IntMatrix mu_v;     // 1 x amb(X2)
};
LocalModelData local_model_at(const GlobalModel& m, unsigned s_orbit_position);  // throws PlaceNotInS

/// The standard two-element fixture: C2 permuting two split places and
/// fixing one, S = everything.
GlobalModel three_place_model();

}  // namespace tatekit
