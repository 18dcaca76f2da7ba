#include "tatekit/bft.hpp"

namespace tatekit {

namespace {

GModule x_module(const GlobalModel& model, int i, IntMatrix* b_prime = nullptr) {
  XSequence x = x_sequence(model);
  if (b_prime) *b_prime = x.b_prime;
  switch (i) {
    case 1: return x.x1;
    case 2: return x.x2;
    case 3: return x.x3;
    default: throw Error("index i must be 1, 2 or 3");
  }
}

}  // namespace

TorusData make_torus_data(GlobalModel model, GModule m) {
  if (!(m.group() == model.group())) throw GroupMismatch("module group differs from the model group");
  if (!m.underlying().torsion().empty()) throw Error("cocharacter module must be torsion-free");
  return TorusData{std::move(model), std::move(m)};
}

BGroup bft_compute(const TorusData& t, int i) {
  BGroup out;
  out.index = i;
  out.mxi = tensor_module(t.m, x_module(t.model, i));
  out.group = coinvariants(out.mxi.mod).group;
  return out;
}

NewtonData newton_norm(const TorusData& t, int i) {
  NewtonData out;
  out.b = bft_compute(t, i);
  NormMapResult n = norm_map(out.b.mxi.mod);
  out.inv = std::move(n.inv);
  out.coinv_to_inv = std::move(n.coinv_to_inv);
  return out;
}

Localization localize_module(const GlobalModel& model, const GModule& mod,
                             unsigned s_orbit_position) {
  Localization out{local_model_at(model, s_orbit_position), PresentedAbGroup(), IntMatrix()};
  const FinGroup& g = model.group();
  const GSet& sk = model.s_places;
  const std::size_t am = mod.ambient_rank();
  const unsigned v = out.local.place;

  // target: coinvariants of the coefficients under G_v
  {
    IntMatrix rel = mod.relations();
    for (unsigned e : out.local.gv.members())
      if (e != 0) rel = IntMatrix::hcat(rel, mod.action(e) - IntMatrix::identity(am));
    out.target = PresentedAbGroup(am, rel);
  }

  // sum_w m_w w  ->  sum over right cosets G_v sigma of sigma(m_{sigma^{-1} v});
  // on the X3 basis x_0 - x_j this is applied through the inclusion into Z[S_K].
  XSequence x = x_sequence(model);
  IntMatrix loc(am, am * sk.size());  // from M (x) Z[S_K]
  for (unsigned sigma_rep : out.local.gv.coset_representatives(Subgroup::Side::Right)) {
    unsigned w = sk.act(g.inv(sigma_rep), v);
    // contribution: sigma(m_w)
    for (std::size_t r = 0; r < am; ++r)
      for (std::size_t c = 0; c < am; ++c)
        if (mod.action(sigma_rep)(r, c) != 0) loc(r, w * am + c) += mod.action(sigma_rep)(r, c);
  }
  // compose with id_M (x) b': M (x) X3 -> M (x) Z[S_K]; note the tensor
  // layout here is X-major within M (x) X, matching tensor_module(mod, x3)
  IntMatrix incl = IntMatrix::kronecker(IntMatrix::identity(am), x.b_prime);
  // loc above is indexed (w, m)-major as (w * am + c): build the matching
  // reindex of M (x) Z[S_K] from tensor_module(mod, x2) layout (m-major)
  IntMatrix reindex(am * sk.size(), am * sk.size());
  for (std::size_t mi = 0; mi < am; ++mi)
    for (unsigned w = 0; w < sk.size(); ++w)
      reindex(w * am + mi, mi * sk.size() + w) = 1;
  out.matrix = loc * reindex * incl;
  return out;
}

Localization localize(const TorusData& t, unsigned s_orbit_position) {
  return localize_module(t.model, t.m, s_orbit_position);
}

TotalLocalization total_localization(const TorusData& t) {
  TotalLocalization out;
  out.b3 = bft_compute(t, 3);
  const std::size_t am = t.m.ambient_rank();
  const std::size_t nu = t.model.s_orbits.size();
  for (unsigned u = 0; u < nu; ++u) out.components.push_back(localize(t, u));

  // middle group (+)_u M_{G_v}
  std::size_t mid_amb = nu * am;
  std::size_t relcols = 0;
  for (const auto& c : out.components) relcols += c.target.relations().cols();
  IntMatrix mid_rel(mid_amb, relcols);
  std::size_t at = 0;
  for (std::size_t u = 0; u < nu; ++u) {
    const IntMatrix& r = out.components[u].target.relations();
    for (std::size_t i = 0; i < am; ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) mid_rel(u * am + i, at + j) = r(i, j);
    at += r.cols();
  }
  out.middle = PresentedAbGroup(mid_amb, mid_rel);

  out.loc_matrix = IntMatrix(mid_amb, out.b3.mxi.mod.ambient_rank());
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t i = 0; i < am; ++i)
      for (std::size_t j = 0; j < out.b3.mxi.mod.ambient_rank(); ++j)
        out.loc_matrix(u * am + i, j) = out.components[u].matrix(i, j);

  out.sum_matrix = IntMatrix(am, mid_amb);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t i = 0; i < am; ++i) out.sum_matrix(i, u * am + i) = 1;
  out.mg = coinvariants(t.m).group;

  auto middle_check = exactness_check(out.loc_matrix, out.sum_matrix, out.b3.group.relations(),
                                      out.middle.relations(), out.mg.relations());
  bool surj = map_cokernel(out.sum_matrix, out.mg.relations()).is_trivial();
  out.exact = middle_check.exact_at_B && surj;
  return out;
}

bool TotalLocalization::image_criterion(const std::vector<IntVec>& tuple) const {
  const std::size_t am = sum_matrix.rows();
  if (tuple.size() != components.size()) throw Error("tuple has the wrong number of places");
  IntVec total(am);
  for (const IntVec& part : tuple) {
    if (part.size() != am) throw Error("tuple entry has the wrong rank");
    total = total + part;
  }
  return mg.element_is_zero(total);
}

Inflation inflate(const TowerModel& tower, const TowerMaps& maps, const GModule& m_lower, int i) {
  Inflation out;
  // inflate the coefficients to the upper group through the surjection
  const FinGroup& gl = tower.upper.group();
  std::vector<IntMatrix> acts(gl.order());
  for (unsigned e = 0; e < gl.order(); ++e) acts[e] = m_lower.action(tower.group_surjection[e]);
  GModule m_up(gl, m_lower.underlying(), std::move(acts), false);

  TorusData tu = make_torus_data(tower.upper, m_up);
  TorusData tl = make_torus_data(tower.lower, m_lower);
  out.upper = bft_compute(tu, i);
  out.lower = bft_compute(tl, i);

  const IntMatrix& ji = (i == 1) ? maps.j1 : (i == 2) ? maps.j2 : maps.j3;
  const IntMatrix& pi = (i == 1) ? maps.p1 : (i == 2) ? maps.p2 : maps.p3;
  const std::size_t am = m_lower.ambient_rank();
  out.matrix = IntMatrix::kronecker(IntMatrix::identity(am), ji);
  out.bijective = presented_map_iso(out.matrix, out.upper.group.relations(),
                                    out.lower.group.ambient_rank(), out.lower.group.relations());
  // section of j_i gives the inverse on coinvariants
  {
    SnfSolver jsolve(ji);
    IntMatrix sec(ji.cols(), ji.rows());
    for (std::size_t c = 0; c < ji.rows(); ++c) {
      auto s = jsolve.solve(unit_vec(ji.rows(), c));
      if (!s) throw InvalidTower("j_i is not surjective");
      sec.set_column(c, *s);
    }
    out.inverse = IntMatrix::kronecker(IntMatrix::identity(am), sec);
  }

  // norm square: N_{L/F} = (id (x) p) . N_{K/F} . (id (x) j) into the upper invariants
  NewtonData nl = newton_norm(tl, i);
  NewtonData nu_data = newton_norm(tu, i);
  IntMatrix idp = IntMatrix::kronecker(IntMatrix::identity(am), pi);
  IntMatrix lhs = nu_data.inv.inclusion * nu_data.coinv_to_inv;  // ambient form of N_{L/F}
  IntMatrix rhs = idp * (nl.inv.inclusion * nl.coinv_to_inv) * out.matrix;
  out.norm_square_commutes = true;
  for (std::size_t j = 0; j < lhs.cols() && out.norm_square_commutes; ++j)
    if (!out.upper.mxi.mod.underlying().elements_equal(lhs.column(j), rhs.column(j)))
      out.norm_square_commutes = false;
  return out;
}

CorRes cor_res(const TorusData& t, const Subgroup& sub, int i) {
  CorRes out;
  out.lower = bft_compute(t, i);
  SubgroupView view = subgroup_view(sub);
  GModule mxi_sub = out.lower.mxi.mod.restricted_to(view);
  out.upper.index = i;
  out.upper.mxi = out.lower.mxi;  // same ambient tensor data
  out.upper.group = coinvariants(mxi_sub).group;
  out.cor = IntMatrix::identity(out.lower.mxi.mod.ambient_rank());
  out.res = IntMatrix(out.lower.mxi.mod.ambient_rank(), out.lower.mxi.mod.ambient_rank());
  for (unsigned r : sub.coset_representatives(Subgroup::Side::Right))
    out.res = out.res + out.lower.mxi.mod.action(r);
  return out;
}

ShapiroBft shapiro_bft(const GlobalModel& model, const Subgroup& sub, const GModule& m0, int i) {
  ShapiroBft out;
  SubgroupView view = subgroup_view(sub);
  out.coind = coinduction(model.group(), view, m0);
  GModule xi_full = x_module(model, i);
  GModule xi_sub = xi_full.restricted_to(view);
  out.big = tensor_module(out.coind.mod, xi_full);
  out.small = tensor_module(m0, xi_sub);
  out.big_coinv = coinvariants(out.big.mod).group;
  out.small_coinv = coinvariants(out.small.mod).group;

  const std::size_t r0 = m0.ambient_rank();
  const std::size_t nx = xi_full.ambient_rank();
  const auto& reps = out.coind.coset_reps;
  const std::size_t nb = reps.size();

  // forward: (block j, s) (x) v  ->  s (x) (x_i-action of r_j) v
  out.forward = IntMatrix(r0 * nx, nb * r0 * nx);
  for (std::size_t j = 0; j < nb; ++j) {
    const IntMatrix& axj = xi_full.action(reps[j]);
    for (std::size_t s = 0; s < r0; ++s)
      for (std::size_t v = 0; v < nx; ++v)
        for (std::size_t w = 0; w < nx; ++w)
          if (axj(w, v) != 0) out.forward(s * nx + w, (j * r0 + s) * nx + v) += axj(w, v);
  }
  // backward: s (x) v -> (block 0, s) (x) v
  out.backward = IntMatrix(nb * r0 * nx, r0 * nx);
  for (std::size_t s = 0; s < r0; ++s)
    for (std::size_t v = 0; v < nx; ++v) out.backward((0 * r0 + s) * nx + v, s * nx + v) = 1;

  IntMatrix fb = out.forward * out.backward;
  bool ok = presented_maps_equal(fb, IntMatrix::identity(r0 * nx), out.small_coinv);
  IntMatrix bf = out.backward * out.forward;
  ok = ok && presented_maps_equal(bf, IntMatrix::identity(nb * r0 * nx), out.big_coinv);
  out.mutually_inverse = ok;
  return out;
}

ReductiveA reductive_a(const GlobalModel& model, const GModule& lambda, const GModule& lambda_c,
                       const IntMatrix& iota) {
  if (!lambda_c.underlying().torsion().empty()) throw Error("central lattice must be torsion-free");
  if (!map_descends(lambda_c, lambda, iota) || !map_equivariant(lambda_c, lambda, iota))
    throw Error("iota is not a G-map");
  ReductiveA out;
  GModule x3 = x_module(model, 3);
  out.lx3 = tensor_module(lambda, x3);
  out.a_group = coinvariants(out.lx3.mod).group;
  NormMapResult n = norm_map(out.lx3.mod);
  out.inv = n.inv;
  out.n_coinv_to_inv = n.coinv_to_inv;

  // central part: (Lambda_C (x) X3)^G mapped into (Lambda (x) X3)^G
  TensorModule cx3 = tensor_module(lambda_c, x3);
  InvariantsResult cinv = invariants(cx3.mod);
  out.central_inv = cinv.group;
  IntMatrix iota_x3 = IntMatrix::kronecker(iota, IntMatrix::identity(x3.ambient_rank()));
  // coordinates of iota(central invariants) in the invariant basis
  SnfSolver inv_solver(out.inv.inclusion);
  IntMatrix central_in_inv(out.inv.inclusion.cols(), cinv.inclusion.cols());
  for (std::size_t j = 0; j < cinv.inclusion.cols(); ++j) {
    auto c = inv_solver.solve(iota_x3 * cinv.inclusion.column(j));
    if (!c) throw Error("internal: central invariants do not land in the invariants");
    central_in_inv.set_column(j, *c);
  }
  out.iota_inv_matrix = central_in_inv;
  out.iota_inv_injective = presented_map_injective(central_in_inv, out.central_inv.relations(),
                                                   out.inv.group.relations());

  // A0 = preimage under N of (central invariants + relations)
  IntMatrix target = IntMatrix::hcat(central_in_inv, out.inv.group.relations());
  out.a0_lattice = preimage_lattice(out.n_coinv_to_inv, target);
  // A0 as an abstract subgroup of A: generators modulo the relations of A
  {
    SnfSolver a0_solver(out.a0_lattice);
    IntMatrix rel_in(out.a0_lattice.cols(), out.a_group.relations().cols());
    for (std::size_t j = 0; j < out.a_group.relations().cols(); ++j) {
      auto c = a0_solver.solve(out.a_group.relations().column(j));
      if (!c) throw Error("internal: A relations do not lie in A0");
      rel_in.set_column(j, *c);
    }
    out.a0_group = PresentedAbGroup(out.a0_lattice.cols(), rel_in);
  }
  for (unsigned u = 0; u < model.s_orbits.size(); ++u)
    out.local_a.push_back(localize_module(model, lambda, u));
  return out;
}

}  // namespace tatekit
