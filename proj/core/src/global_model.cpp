#include "tatekit/global_model.hpp"

#include <algorithm>
#include <set>

namespace tatekit {

GlobalModel make_global_model(GSet places, std::vector<unsigned> s_orbits) {
  GlobalModel m{std::move(places), std::move(s_orbits), {}, GSet(FinGroup(), 0, {}), {}};
  m.orbits = m.places.orbits_and_stabilizers();
  std::sort(m.s_orbits.begin(), m.s_orbits.end());
  m.s_orbits.erase(std::unique(m.s_orbits.begin(), m.s_orbits.end()), m.s_orbits.end());
  for (unsigned oi : m.s_orbits)
    if (oi >= m.orbits.size()) throw Error("S refers to a nonexistent orbit");
  m.s_places = m.places.restricted_to_orbits(m.s_orbits, &m.s_point_map);
  return m;
}

XSequence x_sequence(const GlobalModel& m) {
  if (m.s_orbits.empty() || m.s_places.size() == 0) throw EmptyS("S must be nonempty");
  XSequence x;
  x.x2 = permutation_module(m.s_places);
  ReducedPermModule red = reduced_permutation_module(m.s_places);
  x.x3 = red.mod;
  x.b_prime = red.basis_in_full;
  x.x1 = GModule::trivial(m.group(), 1);
  x.b = IntMatrix(1, m.s_places.size());
  for (unsigned i = 0; i < m.s_places.size(); ++i) x.b(0, i) = 1;
  return x;
}

AdequacyVerdict adequacy_check(const GlobalModel& m) {
  std::set<std::vector<unsigned>> all_stabs, s_stabs;
  for (std::size_t oi = 0; oi < m.orbits.size(); ++oi) {
    for (unsigned w : m.orbits[oi].points) {
      auto stab = m.places.stabilizer_of(w).members();
      all_stabs.insert(stab);
      if (std::binary_search(m.s_orbits.begin(), m.s_orbits.end(), static_cast<unsigned>(oi)))
        s_stabs.insert(std::move(stab));
    }
  }
  AdequacyVerdict v;
  v.stabilizer_cover = (all_stabs == s_stabs);
  v.cyclic_cover = true;
  for (const Subgroup& c : cyclic_subgroups(m.group()))
    if (!s_stabs.count(c.members())) v.cyclic_cover = false;
  return v;
}

CoinvariantExactness coinvariant_exactness(const GlobalModel& m) {
  CoinvariantExactness out;
  XSequence x = x_sequence(m);
  PresentedAbGroup c3 = coinvariants(x.x3).group;
  PresentedAbGroup c2 = coinvariants(x.x2).group;
  PresentedAbGroup c1 = coinvariants(x.x1).group;
  // exactness of 0 -> (X3)_G -> (X2)_G -> (X1)_G -> 0
  bool inj = presented_map_injective(x.b_prime, c3.relations(), c2.relations());
  auto middle = exactness_check(x.b_prime, x.b, c3.relations(), c2.relations(), c1.relations());
  bool surj = map_cokernel(x.b, c1.relations()).is_trivial();
  out.exact = inj && middle.exact_at_B && surj;

  // G^ab = G / [G,G] as the cokernel of (g h g^-1 h^-1)-span on Z^order?
  // Work with the abelianization as the quotient of Z^k (k = #generators)
  // by the relators read off the multiplication table: for every (a, b) the
  // word of a*b minus words of a and b.
  const FinGroup& g = m.group();
  const std::size_t k = g.generators().size();
  auto word_vec = [&](unsigned e) {
    IntVec v(k);
    for (unsigned slot : g.word_of(e)) v[slot] += 1;
    return v;
  };
  IntMatrix rels(k, 0);
  {
    std::vector<IntVec> cols;
    for (unsigned a = 0; a < g.order(); ++a)
      for (unsigned b = 0; b < g.order(); ++b) {
        IntVec v = word_vec(g.mul(a, b)) - word_vec(a) - word_vec(b);
        if (!is_zero(v)) cols.push_back(std::move(v));
      }
    rels = IntMatrix(k, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) rels.set_column(j, cols[j]);
  }
  PresentedAbGroup gab(k, rels);
  // images of the stabilizers of places in S_K
  std::vector<IntVec> stab_words;
  for (unsigned w = 0; w < m.s_places.size(); ++w) {
    Subgroup st = m.s_places.stabilizer_of(w);
    for (unsigned e : st.members())
      if (e != 0) stab_words.push_back(word_vec(e));
  }
  IntMatrix gen(k, stab_words.size());
  for (std::size_t j = 0; j < stab_words.size(); ++j) gen.set_column(j, stab_words[j]);
  out.stabilizers_generate_gab = map_cokernel(gen, gab.relations()).is_trivial();
  return out;
}

TowerModel make_tower(GlobalModel upper, GlobalModel lower, std::vector<unsigned> group_surjection,
                      std::vector<unsigned> place_surjection) {
  const FinGroup& gl = upper.group();
  const FinGroup& gk = lower.group();
  if (group_surjection.size() != gl.order() || place_surjection.size() != upper.places.size())
    throw InvalidTower("surjection tables have the wrong size");
  if (group_surjection[0] != 0) throw InvalidTower("group map must preserve the identity");
  std::vector<char> hit(gk.order(), 0);
  for (unsigned e = 0; e < gl.order(); ++e) {
    if (group_surjection[e] >= gk.order()) throw InvalidTower("group map out of range");
    hit[group_surjection[e]] = 1;
    for (unsigned f = 0; f < gl.order(); ++f)
      if (group_surjection[gl.mul(e, f)] != gk.mul(group_surjection[e], group_surjection[f]))
        throw InvalidTower("group map is not a homomorphism");
  }
  for (char c : hit)
    if (!c) throw InvalidTower("group map is not surjective");
  std::vector<char> phit(lower.places.size(), 0);
  for (unsigned w = 0; w < upper.places.size(); ++w) {
    if (place_surjection[w] >= lower.places.size()) throw InvalidTower("place map out of range");
    phit[place_surjection[w]] = 1;
    for (unsigned e = 0; e < gl.order(); ++e)
      if (place_surjection[upper.places.act(e, w)] !=
          lower.places.act(group_surjection[e], place_surjection[w]))
        throw InvalidTower("place map is not equivariant");
  }
  for (char c : phit)
    if (!c) throw InvalidTower("place map is not surjective");
  // S must correspond: w lies in S_L iff its image lies in S_K
  std::vector<char> in_sl(upper.places.size(), 0), in_sk(lower.places.size(), 0);
  for (unsigned p : upper.s_point_map) in_sl[p] = 1;
  for (unsigned p : lower.s_point_map) in_sk[p] = 1;
  for (unsigned w = 0; w < upper.places.size(); ++w)
    if (in_sl[w] != in_sk[place_surjection[w]])
      throw InvalidTower("S of the upper level is not the preimage of S below");
  return TowerModel{std::move(upper), std::move(lower), std::move(group_surjection),
                    std::move(place_surjection)};
}

TowerMaps tower_maps(const TowerModel& t) {
  TowerMaps out{x_sequence(t.lower), x_sequence(t.upper), Subgroup::trivial(t.upper.group()),
                {}, {}, {}, {}, {}, {}, false};
  const FinGroup& gl = t.upper.group();
  std::vector<unsigned> kernel_members;
  for (unsigned e = 0; e < gl.order(); ++e)
    if (t.group_surjection[e] == 0) kernel_members.push_back(e);
  out.glk = Subgroup(gl, kernel_members);
  const unsigned index_lk = out.glk.order();

  const unsigned nk = t.lower.s_places.size();
  const unsigned nl = t.upper.s_places.size();

  // the maps model the arithmetic situation only when each fiber of
  // S_L -> S_K is a single G(L/K)-orbit
  {
    std::vector<int> lower_pos_chk(t.lower.places.size(), -1);
    for (unsigned i = 0; i < nk; ++i) lower_pos_chk[t.lower.s_point_map[i]] = static_cast<int>(i);
    std::vector<std::vector<unsigned>> fibers(nk);
    for (unsigned w = 0; w < nl; ++w)
      fibers[static_cast<unsigned>(lower_pos_chk[t.place_surjection[t.upper.s_point_map[w]]])]
          .push_back(w);
    for (const auto& fib : fibers) {
      if (fib.empty()) throw InvalidTower("empty fiber over a place in S");
      std::set<unsigned> orbit;
      for (unsigned e : out.glk.members()) orbit.insert(t.upper.s_places.act(e, fib.front()));
      if (orbit.size() != fib.size()) throw InvalidTower("fiber is not a single G(L/K)-orbit");
    }
  }
  // j2: basis element w of S_L to the place below it
  std::vector<int> lower_pos(t.lower.places.size(), -1);
  for (unsigned i = 0; i < nk; ++i) lower_pos[t.lower.s_point_map[i]] = static_cast<int>(i);
  out.j2 = IntMatrix(nk, nl);
  for (unsigned w = 0; w < nl; ++w)
    out.j2(static_cast<unsigned>(lower_pos[t.place_surjection[t.upper.s_point_map[w]]]), w) = 1;
  // p2: v maps to sum over w | v of |Stab_{G(L/K)}(w)| w
  out.p2 = IntMatrix(nl, nk);
  for (unsigned w = 0; w < nl; ++w) {
    unsigned below = static_cast<unsigned>(lower_pos[t.place_surjection[t.upper.s_point_map[w]]]);
    Int weight = 0;
    for (unsigned e : out.glk.members())
      if (t.upper.s_places.act(e, w) == w) weight += 1;
    out.p2(w, below) = weight;
  }
  out.j1 = IntMatrix::identity(1);
  out.p1 = IntMatrix{{static_cast<long long>(index_lk)}};
  // restrictions to the reduced modules: solve b'_K j3 = j2 b'_L and
  // b'_L p3 = p2 b'_K columnwise
  {
    SnfSolver bk(out.xk.b_prime);
    IntMatrix rhs = out.j2 * out.xl.b_prime;
    out.j3 = IntMatrix(out.xk.x3.ambient_rank(), out.xl.x3.ambient_rank());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      auto c = bk.solve(rhs.column(j));
      if (!c) throw InvalidTower("j2 does not restrict to the augmentation kernels");
      out.j3.set_column(j, *c);
    }
    SnfSolver bl(out.xl.b_prime);
    IntMatrix rhs2 = out.p2 * out.xk.b_prime;
    out.p3 = IntMatrix(out.xl.x3.ambient_rank(), out.xk.x3.ambient_rank());
    for (std::size_t j = 0; j < rhs2.cols(); ++j) {
      auto c = bl.solve(rhs2.column(j));
      if (!c) throw InvalidTower("p2 does not restrict to the augmentation kernels");
      out.p3.set_column(j, *c);
    }
  }

  // identities: p j = N_{L/K}, j p = [L:K], gamma_i an isomorphism
  auto norm_lk = [&](const GModule& mod) {
    IntMatrix n(mod.ambient_rank(), mod.ambient_rank());
    for (unsigned e : out.glk.members()) n = n + mod.action(e);
    return n;
  };
  bool ok = true;
  ok = ok && (out.p1 * out.j1 == norm_lk(out.xl.x1));
  ok = ok && (out.p2 * out.j2 == norm_lk(out.xl.x2));
  ok = ok && (out.p3 * out.j3 == norm_lk(out.xl.x3));
  ok = ok && (out.j1 * out.p1 == IntMatrix{{static_cast<long long>(index_lk)}});
  {
    IntMatrix id2 = IntMatrix::identity(nk);
    IntMatrix sc2(nk, nk);
    for (unsigned i = 0; i < nk; ++i)
      for (unsigned j = 0; j < nk; ++j) sc2(i, j) = Int(index_lk) * id2(i, j);
    ok = ok && (out.j2 * out.p2 == sc2);
    IntMatrix id3 = IntMatrix::identity(out.xk.x3.ambient_rank());
    IntMatrix sc3(id3.rows(), id3.cols());
    for (std::size_t i = 0; i < id3.rows(); ++i) sc3(i, i) = Int(index_lk);
    ok = ok && (out.j3 * out.p3 == sc3);
  }
  // gamma_i: X_i(L)_{G(L/K)} -> X_i(K): j_i must kill the (e - 1)-span of
  // G(L/K) and be bijective on the quotients
  auto gamma_iso = [&](const IntMatrix& j, const GModule& xl_mod, const GModule& xk_mod) {
    IntMatrix rel = xl_mod.relations();
    for (unsigned e : out.glk.members())
      if (e != 0)
        rel = IntMatrix::hcat(rel, xl_mod.action(e) - IntMatrix::identity(xl_mod.ambient_rank()));
    PresentedAbGroup coinv(xl_mod.ambient_rank(), rel);
    return presented_map_iso(j, coinv.relations(), xk_mod.ambient_rank(), xk_mod.relations());
  };
  ok = ok && gamma_iso(out.j1, out.xl.x1, out.xk.x1);
  ok = ok && gamma_iso(out.j2, out.xl.x2, out.xk.x2);
  ok = ok && gamma_iso(out.j3, out.xl.x3, out.xk.x3);
  out.identities_hold = ok;
  return out;
}

LocalModelData local_model_at(const GlobalModel& m, unsigned s_orbit_position) {
  if (s_orbit_position >= m.s_orbits.size()) throw PlaceNotInS("orbit index outside S");
  // base point of the chosen orbit, in S_K coordinates
  unsigned orbit = m.s_orbits[s_orbit_position];
  unsigned base_vk = m.orbits[orbit].points.front();
  unsigned v = 0;
  for (unsigned i = 0; i < m.s_places.size(); ++i)
    if (m.s_point_map[i] == base_vk) v = i;
  LocalModelData out{m.s_places.stabilizer_of(v), v, IntMatrix(m.s_places.size(), 1),
                     IntMatrix(1, m.s_places.size())};
  out.lambda_v(v, 0) = 1;
  out.mu_v(0, v) = 1;
  return out;
}

GlobalModel three_place_model() {
  FinGroup c2 = group_from_permutations(2, {{1, 0}});
  GSet places = GSet::from_generator_actions(c2, 3, {{1, 0, 2}});
  return make_global_model(places, {0, 1});
}

}  // namespace tatekit
