#include "tatekit/h1y.hpp"

namespace tatekit {

namespace {

IntMatrix blockdiag(const IntMatrix& b, std::size_t copies) {
  IntMatrix r(b.rows() * copies, b.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(c * b.rows() + i, c * b.cols() + j) = b(i, j);
  return r;
}

IntMatrix in_basis(const SnfSolver& solver, const IntMatrix& cols, const char* what) {
  IntMatrix out(solver.snf().V.rows(), cols.cols());
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    auto c = solver.solve(cols.column(j));
    if (!c) throw Error(std::string("internal: column outside lattice in ") + what);
    out.set_column(j, *c);
  }
  return out;
}

IntMatrix stack_rows(const std::vector<IntMatrix>& rows, std::size_t width) {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.rows();
  IntMatrix out(total, width);
  std::size_t at = 0;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < width; ++j) out(at + i, j) = r(i, j);
    at += r.rows();
  }
  return out;
}

}  // namespace

IntMatrix H1YContext::mu_of(const IntVec& y_ambient) const {
  return hom_am.matrix_of(xi * y_ambient);
}

H1YContext make_h1y_context(ExtensionData ext, GModule m, GModule y, IntMatrix xi) {
  H1YContext ctx;
  ctx.hom_am = hom_module(ext.kernel, m);
  if (xi.rows() != ctx.hom_am.mod.ambient_rank() || xi.cols() != y.ambient_rank())
    throw InvalidXi("xi has the wrong shape");
  if (!map_descends(y, ctx.hom_am.mod, xi) || !map_equivariant(y, ctx.hom_am.mod, xi))
    throw InvalidXi("xi is not a G-map into Hom(A, M)");
  ctx.ext = std::move(ext);
  ctx.m = std::move(m);
  ctx.y = std::move(y);
  ctx.xi = std::move(xi);
  return ctx;
}

H1YGroup h1y_compute_inner(const H1YContext& ctx, bool with_companion);

H1YGroup h1y_compute(const H1YContext& ctx) { return h1y_compute_inner(ctx, true); }

H1YGroup h1y_compute_inner(const H1YContext& ctx, bool with_companion) {
  const FinGroup& g = ctx.m.group();
  const std::size_t am = ctx.m.ambient_rank();
  const auto& gens = g.generators();
  const std::size_t k = gens.size();
  const IntMatrix& relM = ctx.m.relations();

  H1YGroup h;
  h.ctx_ = std::make_shared<H1YContext>(ctx);
  h.h1_gm = tate_cohomology(ctx.m, 1);
  h.h2_gm = tate_cohomology(ctx.m, 2);
  h.y_inv = invariants(ctx.y);
  h.y_coinv = coinvariants(ctx.y).group;
  const IntMatrix& By = h.y_inv.inclusion;
  const std::size_t ky = By.cols();
  h.ky_ = ky;
  SnfSolver by_solver(By);
  h.yg_group = PresentedAbGroup(ky, in_basis(by_solver, ctx.y.relations(), "Y^G"));

  std::vector<IntMatrix> mu_basis(ky);
  for (std::size_t i = 0; i < ky; ++i) mu_basis[i] = ctx.mu_of(By.column(i));

  // pair vector layout: (u : ky invariant coordinates, w : k*am generator values)
  const std::size_t pair_dim = ky + k * am;
  auto tmat = [&](unsigned sigma, unsigned tau) {
    // the u-columns of T(sigma,tau) = mu(y)(alpha_{sigma,tau})
    IntMatrix t(am, pair_dim);
    const IntVec& alpha = ctx.ext.cocycle.at(sigma, tau);
    for (std::size_t i = 0; i < ky; ++i) {
      IntVec col = mu_basis[i] * alpha;
      for (std::size_t r = 0; r < am; ++r) t(r, i) = col[r];
    }
    return t;
  };
  auto wsel = [&](std::size_t slot) {
    IntMatrix s(am, pair_dim);
    for (std::size_t i = 0; i < am; ++i) s(i, ky + slot * am + i) = 1;
    return s;
  };

  // section-value expansion along the BFS tree:
  // m_{p*gen} = m_p + A(p) w_slot - T(p, gen)
  std::vector<IntMatrix> expand(g.order(), IntMatrix(am, pair_dim));
  for (unsigned e = 1; e < g.order(); ++e) {
    auto [par, slot] = g.parent_edge(e);
    expand[e] = expand[par] + ctx.m.action(par) * wsel(slot) - tmat(par, gens[slot]);
  }
  h.expand_ = expand;

  // twisted cocycle conditions m_{e g_s} = m_e + A(e) m_{g_s} - T(e, g_s)
  std::vector<IntMatrix> rows;
  for (unsigned e = 0; e < g.order(); ++e)
    for (std::size_t s = 0; s < k; ++s) {
      IntMatrix row = expand[g.mul(e, gens[s])] - expand[e] - ctx.m.action(e) * expand[gens[s]] +
                      tmat(e, gens[s]);
      if (!row.is_zero()) rows.push_back(std::move(row));
    }
  IntMatrix cond = stack_rows(rows, pair_dim);
  IntMatrix L = cond.rows() == 0
                    ? IntMatrix::identity(pair_dim)
                    : (relM.cols() ? preimage_lattice(cond, blockdiag(relM, cond.rows() / am))
                                   : kernel_lattice(cond));
  h.pair_basis_ = L;
  h.pair_solver_ = std::make_shared<SnfSolver>(L);

  // zero-element sublattice: y lands in rel_Y and every section value in rel_M
  IntMatrix zrows(ctx.y.ambient_rank(), pair_dim);
  for (std::size_t i = 0; i < ctx.y.ambient_rank(); ++i)
    for (std::size_t j = 0; j < ky; ++j) zrows(i, j) = By(i, j);
  std::vector<IntMatrix> zstack = {zrows};
  for (unsigned e = 1; e < g.order(); ++e) zstack.push_back(expand[e]);
  IntMatrix zcond = stack_rows(zstack, pair_dim);
  IntMatrix ztargets(zcond.rows(), ctx.y.relations().cols() + (g.order() - 1) * relM.cols());
  {
    const IntMatrix& ry = ctx.y.relations();
    for (std::size_t i = 0; i < ctx.y.ambient_rank(); ++i)
      for (std::size_t j = 0; j < ry.cols(); ++j) ztargets(i, j) = ry(i, j);
    for (unsigned e = 1; e < g.order(); ++e)
      for (std::size_t i = 0; i < am; ++i)
        for (std::size_t j = 0; j < relM.cols(); ++j)
          ztargets(ctx.y.ambient_rank() + (e - 1) * am + i, ry.cols() + (e - 1) * relM.cols() + j) =
              relM(i, j);
  }
  IntMatrix zero_lattice = preimage_lattice(zcond, ztargets);

  // coboundaries (0, w = ((A(gen_s)-1) n)_s)
  IntMatrix cb(pair_dim, am);
  for (std::size_t s = 0; s < k; ++s) {
    IntMatrix block = ctx.m.action(gens[s]) - IntMatrix::identity(am);
    for (std::size_t i = 0; i < am; ++i)
      for (std::size_t j = 0; j < am; ++j) cb(ky + s * am + i, j) = block(i, j);
  }
  IntMatrix killers = IntMatrix::hcat(zero_lattice, cb);
  h.group = PresentedAbGroup(L.cols(), in_basis(*h.pair_solver_, killers, "H^1_Y"));

  // r : top ky rows of L
  h.r_matrix = IntMatrix(ky, L.cols());
  for (std::size_t i = 0; i < ky; ++i)
    for (std::size_t j = 0; j < L.cols(); ++j) h.r_matrix(i, j) = L(i, j);

  // i : H^1(G,M) -> H^1_Y, a cocycle with y = 0
  h.i_matrix = IntMatrix(L.cols(), h.h1_gm.group().ambient_rank());
  for (std::size_t i = 0; i < h.h1_gm.group().ambient_rank(); ++i) {
    Cocycle1Table z = h.h1_gm.cocycle1_representative(unit_vec(h.h1_gm.group().ambient_rank(), i));
    IntVec p(pair_dim);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t r = 0; r < am; ++r) p[ky + s * am + r] = z.val[gens[s]][r];
    auto c = h.pair_solver_->solve(p);
    if (!c) throw Error("internal: inflation image not a pair cocycle");
    h.i_matrix.set_column(i, *c);
  }

  // t : Y^G -> H^2(G,M), the 2-cocycle mu(y)(alpha)
  h.t_matrix = IntMatrix(h.h2_gm.group().ambient_rank(), ky);
  for (std::size_t i = 0; i < ky; ++i) {
    Cocycle2Table tz = Cocycle2Table::zeros(g.order(), am);
    for (unsigned s = 0; s < g.order(); ++s)
      for (unsigned t = 0; t < g.order(); ++t) tz.at(s, t) = mu_basis[i] * ctx.ext.cocycle.at(s, t);
    h.t_matrix.set_column(i, h.h2_gm.class_of_cocycle2(tz));
  }

  // c : amb(Y) -> H^1_Y via the explicit corestriction formula
  h.c_matrix = IntMatrix(L.cols(), ctx.y.ambient_rank());
  for (std::size_t j = 0; j < ctx.y.ambient_rank(); ++j) {
    IntMatrix mu = ctx.mu_of(unit_vec(ctx.y.ambient_rank(), j));
    IntVec ny = ctx.y.norm_matrix() * unit_vec(ctx.y.ambient_rank(), j);
    auto u = by_solver.solve(ny);
    if (!u) throw Error("internal: norm image not invariant");
    IntVec p(pair_dim);
    for (std::size_t i = 0; i < ky; ++i) p[i] = (*u)[i];
    for (std::size_t s = 0; s < k; ++s) {
      IntVec acc(am);
      for (unsigned t = 0; t < g.order(); ++t)
        acc = acc + ctx.m.action(g.inv(t)) * (mu * ctx.ext.cocycle.at(t, gens[s]));
      for (std::size_t r = 0; r < am; ++r) p[ky + s * am + r] = acc[r];
    }
    auto c = h.pair_solver_->solve(p);
    if (!c) throw Error("internal: corestriction pair not a cocycle");
    h.c_matrix.set_column(j, *c);
  }

  // companion H^1(E, M) with Y = Hom(A,M), xi = id, plus the projection pi
  if (with_companion) {
    H1YContext em;
    em.ext = ctx.ext;
    em.m = ctx.m;
    em.y = ctx.hom_am.mod;
    em.hom_am = ctx.hom_am;
    em.xi = IntMatrix::identity(ctx.hom_am.mod.ambient_rank());
    H1YGroup hem = h1y_compute_inner(em, false);
    h.h1_em = hem.group;
    h.pi_matrix = IntMatrix(hem.group.ambient_rank(), L.cols());
    for (std::size_t j = 0; j < L.cols(); ++j) {
      H1YGroup::Pair rep = h.representative(unit_vec(L.cols(), j));
      IntVec yprime = ctx.xi * rep.y_ambient;
      h.pi_matrix.set_column(j, hem.class_of_pair(yprime, rep.section));
    }
  }
  return h;
}

IntVec H1YGroup::class_of_pair(const IntVec& y_ambient, const std::vector<IntVec>& section) const {
  const H1YContext& ctx = *ctx_;
  const FinGroup& g = ctx.m.group();
  const auto& gens = g.generators();
  const std::size_t am = ctx.m.ambient_rank();
  SnfSolver by_solver(y_inv.inclusion);
  auto u = by_solver.solve(y_ambient);
  if (!u) throw Error("y is not in the invariant lattice");
  IntVec p(ky_ + gens.size() * am);
  for (std::size_t i = 0; i < ky_; ++i) p[i] = (*u)[i];
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t r = 0; r < am; ++r) p[ky_ + s * am + r] = section[gens[s]][r];
  auto c = pair_solver_->solve(p);
  if (!c) throw Error("pair is not a twisted cocycle");
  return *c;
}

H1YGroup::Pair H1YGroup::representative(const IntVec& cls) const {
  IntVec p = pair_basis_ * cls;
  Pair out;
  IntVec u(p.begin(), p.begin() + ky_);
  out.y_ambient = y_inv.inclusion * u;
  out.section.resize(expand_.size());
  for (std::size_t e = 0; e < expand_.size(); ++e) out.section[e] = expand_[e] * p;
  return out;
}

bool H1YGroup::pair_is_cocycle(const IntVec& y_ambient, const std::vector<IntVec>& section) const {
  const H1YContext& ctx = *ctx_;
  const FinGroup& g = ctx.m.group();
  for (unsigned s : g.generators())
    if (!ctx.y.underlying().element_is_zero(ctx.y.action(s) * y_ambient - y_ambient)) return false;
  IntMatrix mu = ctx.mu_of(y_ambient);
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned t = 0; t < g.order(); ++t) {
      IntVec lhs = section[s] + ctx.m.action(s) * section[t] - section[g.mul(s, t)];
      if (!ctx.m.underlying().elements_equal(lhs, mu * ctx.ext.cocycle.at(s, t))) return false;
    }
  return true;
}

AbsBTVerdict absbt_criterion(const H1YContext& ctx, const H1YGroup& h) {
  AbsBTVerdict v;
  v.c_iso = presented_map_iso(h.c_matrix, h.y_coinv.relations(), h.group.ambient_rank(),
                              h.group.relations());

  BilinearPairing pairing;
  pairing.lhs = &ctx.ext.kernel;
  pairing.rhs = &ctx.y;
  pairing.out = &ctx.m;
  pairing.eval = [&ctx](const IntVec& a, const IntVec& y) { return ctx.mu_of(y) * a; };

  TateGroup hm1 = tate_cohomology(ctx.y, -1);
  IntMatrix cup1(h.h1_gm.group().ambient_rank(), hm1.group().ambient_rank());
  for (std::size_t i = 0; i < hm1.group().ambient_rank(); ++i) {
    IntVec y = hm1.norm_kernel_representative(unit_vec(hm1.group().ambient_rank(), i));
    Cocycle1Table c = cup_2_minus1(pairing, ctx.ext.cocycle, y);
    cup1.set_column(i, h.h1_gm.class_of_cocycle1(c));
  }
  v.cup_minus1_bijective = presented_map_iso(cup1, hm1.group().relations(),
                                             h.h1_gm.group().ambient_rank(),
                                             h.h1_gm.group().relations());

  TateGroup h0 = tate_cohomology(ctx.y, 0);
  IntMatrix cup0(h.h2_gm.group().ambient_rank(), h0.group().ambient_rank());
  for (std::size_t i = 0; i < h0.group().ambient_rank(); ++i) {
    IntVec y = h0.invariant_representative(unit_vec(h0.group().ambient_rank(), i));
    Cocycle2Table c = cup_2_0(pairing, ctx.ext.cocycle, y);
    cup0.set_column(i, h.h2_gm.class_of_cocycle2(c));
  }
  v.cup_0_injective =
      presented_map_injective(cup0, h0.group().relations(), h.h2_gm.group().relations());
  return v;
}

IntMatrix h1y_psi(const H1YContext& c1, const H1YGroup& h1, const H1YContext& c2,
                  const H1YGroup& h2, const IntMatrix& f, const IntMatrix& g) {
  // square: mu2(g y) = f . mu1(y) as maps A -> M2, for ambient y
  for (std::size_t j = 0; j < c1.y.ambient_rank(); ++j) {
    IntMatrix lhs = c2.mu_of(g * unit_vec(c1.y.ambient_rank(), j));
    IntMatrix rhs = f * c1.mu_of(unit_vec(c1.y.ambient_rank(), j));
    for (std::size_t col = 0; col < lhs.cols(); ++col)
      if (!c2.m.underlying().element_is_zero(lhs.column(col) - rhs.column(col)))
        throw SquareDoesNotCommute("psi: xi-square does not commute");
  }
  IntMatrix out(h2.group.ambient_rank(), h1.group.ambient_rank());
  for (std::size_t j = 0; j < h1.group.ambient_rank(); ++j) {
    H1YGroup::Pair rep = h1.representative(unit_vec(h1.group.ambient_rank(), j));
    std::vector<IntVec> section(rep.section.size());
    for (std::size_t e = 0; e < rep.section.size(); ++e) section[e] = f * rep.section[e];
    out.set_column(j, h2.class_of_pair(g * rep.y_ambient, section));
  }
  return out;
}

IntMatrix h1y_psi_prime(const H1YContext& ctx_to, const H1YGroup& h_to,
                        const H1YContext& ctx_from, const H1YGroup& h_from,
                        const ExtensionMorphism& mor) {
  // xi_from must be xi_to composed with h on the kernel side
  for (std::size_t j = 0; j < ctx_to.y.ambient_rank(); ++j) {
    IntMatrix lhs = ctx_from.mu_of(unit_vec(ctx_to.y.ambient_rank(), j));
    IntMatrix rhs = ctx_to.mu_of(unit_vec(ctx_to.y.ambient_rank(), j)) * mor.h;
    for (std::size_t col = 0; col < lhs.cols(); ++col)
      if (!ctx_from.m.underlying().element_is_zero(lhs.column(col) - rhs.column(col)))
        throw SquareDoesNotCommute("psi': xi is not the h-composite");
  }
  IntMatrix out(h_from.group.ambient_rank(), h_to.group.ambient_rank());
  for (std::size_t j = 0; j < h_to.group.ambient_rank(); ++j) {
    H1YGroup::Pair rep = h_to.representative(unit_vec(h_to.group.ambient_rank(), j));
    IntMatrix mu = ctx_to.mu_of(rep.y_ambient);
    std::vector<IntVec> section(rep.section.size());
    for (std::size_t e = 0; e < rep.section.size(); ++e)
      section[e] = rep.section[e] + mu * mor.delta[e];
    out.set_column(j, h_from.class_of_pair(rep.y_ambient, section));
  }
  return out;
}

H1YRestriction h1y_restrict(const H1YContext& ctx, const H1YGroup& h, const Subgroup& sub) {
  H1YRestriction out;
  SubgroupView view = subgroup_view(sub);
  ExtensionData ext{ctx.ext.kernel.restricted_to(view), restrict_cocycle2(ctx.ext.cocycle, view)};
  out.ctx = make_h1y_context(std::move(ext), ctx.m.restricted_to(view), ctx.y.restricted_to(view),
                             ctx.xi);
  out.group = h1y_compute(out.ctx);
  out.res_matrix = IntMatrix(out.group.group.ambient_rank(), h.group.ambient_rank());
  for (std::size_t j = 0; j < h.group.ambient_rank(); ++j) {
    H1YGroup::Pair rep = h.representative(unit_vec(h.group.ambient_rank(), j));
    std::vector<IntVec> section(view.group.order());
    for (unsigned e = 0; e < view.group.order(); ++e) section[e] = rep.section[view.to_parent[e]];
    out.res_matrix.set_column(j, out.group.class_of_pair(rep.y_ambient, section));
  }
  out.averaging = IntMatrix(ctx.y.ambient_rank(), ctx.y.ambient_rank());
  for (unsigned r : sub.coset_representatives(Subgroup::Side::Right))
    out.averaging = out.averaging + ctx.y.action(r);
  return out;
}

IntMatrix invert_presented_iso(const IntMatrix& f, const PresentedAbGroup& src,
                               const PresentedAbGroup& dst) {
  IntMatrix full = IntMatrix::hcat(f, dst.relations());
  SnfSolver solver(full);
  IntMatrix out(src.ambient_rank(), dst.ambient_rank());
  for (std::size_t i = 0; i < dst.ambient_rank(); ++i) {
    auto sol = solver.solve(unit_vec(dst.ambient_rank(), i));
    if (!sol) throw Error("map is not surjective; cannot invert");
    IntVec x(sol->begin(), sol->begin() + src.ambient_rank());
    out.set_column(i, x);
  }
  return out;
}

}  // namespace tatekit
