#include "tatekit/tn.hpp"

namespace tatekit {

TNTriple make_tn_triple(GModule x, GModule a, Cocycle2Table alpha) {
  if (!x.underlying().torsion().empty()) throw Error("X must be torsion-free");
  TNTriple t;
  t.hom_xa = hom_module(x, a);
  if (!is_cocycle2(t.hom_xa.mod, alpha)) throw Error("alpha is not a 2-cocycle in Hom(X,A)");
  t.x = std::move(x);
  t.a = std::move(a);
  t.alpha = std::move(alpha);
  return t;
}

CupShiftResult cup_shift_matrix(const GModule& cmod, const Cocycle2Table& alpha, const GModule& v,
                                const GModule& w,
                                const std::function<IntMatrix(const IntVec&)>& eval_matrix,
                                int degree) {
  const FinGroup& g = cmod.group();
  CupShiftResult out;

  // shift both sides into base degree -1 or 0
  GModule vs = v, ws = w;
  std::size_t shift_rank = 1;
  int base = degree;
  if (degree <= -2) {
    GModule ideal = augmentation_ideal_module(g);
    for (int i = degree; i < -1; ++i) {
      vs = tensor_module(ideal, vs).mod;
      ws = tensor_module(ideal, ws).mod;
      shift_rank *= ideal.ambient_rank();
    }
    base = -1;
  } else if (degree >= 1) {
    GModule jmod = norm_quotient_module(g);
    for (int i = 0; i < degree; ++i) {
      vs = tensor_module(jmod, vs).mod;
      ws = tensor_module(jmod, ws).mod;
      shift_rank *= jmod.ambient_rank();
    }
    base = 0;
  }

  BilinearPairing pairing;
  pairing.lhs = &cmod;
  pairing.rhs = &vs;
  pairing.out = &ws;
  pairing.eval = [&eval_matrix, shift_rank](const IntVec& c, const IntVec& vvec) {
    IntMatrix e = eval_matrix(c);
    return IntMatrix::kronecker(IntMatrix::identity(shift_rank), e) * vvec;
  };

  if (base == -1) {
    out.source = tate_cohomology(vs, -1);
    out.target = tate_cohomology(ws, 1);
    out.matrix = IntMatrix(out.target.group().ambient_rank(), out.source.group().ambient_rank());
    for (std::size_t i = 0; i < out.source.group().ambient_rank(); ++i) {
      IntVec b = out.source.norm_kernel_representative(unit_vec(out.source.group().ambient_rank(), i));
      Cocycle1Table c = cup_2_minus1(pairing, alpha, b);
      out.matrix.set_column(i, out.target.class_of_cocycle1(c));
    }
  } else {
    out.source = tate_cohomology(vs, 0);
    out.target = tate_cohomology(ws, 2);
    out.matrix = IntMatrix(out.target.group().ambient_rank(), out.source.group().ambient_rank());
    for (std::size_t i = 0; i < out.source.group().ambient_rank(); ++i) {
      IntVec b = out.source.invariant_representative(unit_vec(out.source.group().ambient_rank(), i));
      Cocycle2Table c = cup_2_0(pairing, alpha, b);
      out.matrix.set_column(i, out.target.class_of_cocycle2(c));
    }
  }
  out.bijective = presented_map_iso(out.matrix, out.source.group().relations(),
                                    out.target.group().ambient_rank(),
                                    out.target.group().relations());
  return out;
}

TNVerdict verify_weak_tn(const TNTriple& t, int lo, int hi) {
  if (hi - lo > 8 || lo < -5 || hi > 5) throw WindowTooWide("weak TN window too wide");
  const FinGroup& g = t.x.group();
  TNVerdict v;
  v.lo = lo;
  v.hi = hi;
  for (const Subgroup& sub : all_subgroups(g)) {
    SubgroupView view = subgroup_view(sub);
    GModule xs = t.x.restricted_to(view);
    GModule as = t.a.restricted_to(view);
    GModule cs = t.hom_xa.mod.restricted_to(view);
    Cocycle2Table alpha_res = restrict_cocycle2(t.alpha, view);
    std::vector<bool> row;
    for (int r = lo; r <= hi; ++r) {
      auto eval = [&](const IntVec& c) { return t.hom_xa.matrix_of(c); };
      CupShiftResult cup = cup_shift_matrix(cs, alpha_res, xs, as, eval, r);
      row.push_back(cup.bijective);
    }
    v.subgroup_members.push_back(sub.members());
    v.weak_tn.push_back(std::move(row));
  }
  v.rigid = verify_rigidity(t);
  return v;
}

std::vector<bool> verify_rigidity(const TNTriple& t) {
  const FinGroup& g = t.x.group();
  std::vector<bool> out;
  for (const Subgroup& sub : all_subgroups(g)) {
    SubgroupView view = subgroup_view(sub);
    GModule cs = t.hom_xa.mod.restricted_to(view);
    out.push_back(tate_cohomology(cs, 1).group().is_trivial());
  }
  return out;
}

bool class_c_membership(const TNTriple& t, const GModule& m, int lo, int hi) {
  HomModule hom_mx = hom_module(m, t.x);
  HomModule hom_ma = hom_module(m, t.a);
  auto eval = [&](const IntVec& c) {
    // composition Hom(X,A) x Hom(M,X) -> Hom(M,A) on presentations: the
    // matrix sends hom_mx coordinates to hom_ma coordinates
    IntMatrix cmat = t.hom_xa.matrix_of(c);
    IntMatrix out(hom_ma.mod.ambient_rank(), hom_mx.mod.ambient_rank());
    for (std::size_t k = 0; k < hom_mx.mod.ambient_rank(); ++k) {
      IntMatrix comp = cmat * hom_mx.matrix_of(unit_vec(hom_mx.mod.ambient_rank(), k));
      auto coords = hom_ma.coords_of(comp);
      if (!coords) throw Error("internal: composition left the Hom lattice");
      out.set_column(k, *coords);
    }
    return out;
  };
  for (int r = lo; r <= hi; ++r) {
    CupShiftResult cup = cup_shift_matrix(t.hom_xa.mod, t.alpha, hom_mx.mod, hom_ma.mod, eval, r);
    if (!cup.bijective) return false;
  }
  return true;
}

namespace {

// xi for Y = M (x) X' into Hom(kernel, M (x) A'): the column for the Y-basis
// vector (i, j) is the homomorphism  f  |->  m_i (x) transform(f)(x_j).
IntMatrix tautological_xi(std::size_t m_rank, std::size_t x_rank, std::size_t a_rank,
                          const HomModule& kernel_hom,
                          const std::function<IntMatrix(const IntMatrix&)>& transform,
                          const HomModule& hom_kernel_to_ma) {
  const std::size_t kamb = kernel_hom.mod.ambient_rank();
  std::vector<IntMatrix> transformed(kamb);
  for (std::size_t k = 0; k < kamb; ++k)
    transformed[k] = transform(kernel_hom.matrix_of(unit_vec(kamb, k)));
  IntMatrix xi(hom_kernel_to_ma.mod.ambient_rank(), m_rank * x_rank);
  for (std::size_t i = 0; i < m_rank; ++i)
    for (std::size_t j = 0; j < x_rank; ++j) {
      IntMatrix h(m_rank * a_rank, kamb);
      for (std::size_t k = 0; k < kamb; ++k)
        for (std::size_t r = 0; r < a_rank; ++r) h(i * a_rank + r, k) = transformed[k](r, j);
      auto coords = hom_kernel_to_ma.coords_of(h);
      if (!coords) throw Error("internal: tautological xi left the Hom lattice");
      xi.set_column(i * x_rank + j, *coords);
    }
  return xi;
}

H1YContext assemble_context(ExtensionData ext, GModule coeff, GModule y, HomModule hom_am,
                            IntMatrix xi) {
  // variant of make_h1y_context with a precomputed Hom module
  H1YContext ctx;
  if (xi.rows() != hom_am.mod.ambient_rank() || xi.cols() != y.ambient_rank())
    throw InvalidXi("xi has the wrong shape");
  if (!map_descends(y, hom_am.mod, xi) || !map_equivariant(y, hom_am.mod, xi))
    throw InvalidXi("xi is not a G-map into Hom(A, M)");
  ctx.ext = std::move(ext);
  ctx.m = std::move(coeff);
  ctx.y = std::move(y);
  ctx.hom_am = std::move(hom_am);
  ctx.xi = std::move(xi);
  return ctx;
}

}  // namespace

TNAlgContext tn_h1alg_context(const TNTriple& t, const GModule& m) {
  if (!m.underlying().torsion().empty()) throw Error("M must be torsion-free");
  TNAlgContext out;
  out.y = tensor_module(m, t.x);
  out.ma = tensor_module(m, t.a);
  ExtensionData ext{t.hom_xa.mod, t.alpha};
  HomModule hk = hom_module(t.hom_xa.mod, out.ma.mod);
  IntMatrix xi = tautological_xi(m.ambient_rank(), t.x.ambient_rank(), t.a.ambient_rank(), t.hom_xa,
                                 [](const IntMatrix& f) { return f; }, hk);
  out.ctx = assemble_context(std::move(ext), out.ma.mod, out.y.mod, std::move(hk), std::move(xi));
  return out;
}

TNRho triple_morphism_rho(const TNTriple& t2, const TNTriple& t1, const IntMatrix& b,
                          const IntMatrix& a, const GModule& m, const Cocycle1Table* twist_a,
                          const Cocycle1Table* twist_b) {
  const FinGroup& g = m.group();
  if (!map_descends(t2.x, t1.x, b) || !map_equivariant(t2.x, t1.x, b))
    throw SquareDoesNotCommute("b is not a G-map X2 -> X1");
  if (!map_descends(t2.a, t1.a, a) || !map_equivariant(t2.a, t1.a, a))
    throw SquareDoesNotCommute("a is not a G-map A2 -> A1");

  // the two pushforwards of alpha into Hom(X2, A1) must agree as classes
  HomModule hom21 = hom_module(t2.x, t1.a);
  auto push_a = [&](const IntVec& c) {  // a . f for f in Hom(X2,A2)
    auto coords = hom21.coords_of(a * t2.hom_xa.matrix_of(c));
    if (!coords) throw Error("internal: pushforward left the Hom lattice");
    return *coords;
  };
  auto push_b = [&](const IntVec& c) {  // f . b for f in Hom(X1,A1)
    auto coords = hom21.coords_of(t1.hom_xa.matrix_of(c) * b);
    if (!coords) throw Error("internal: pullback left the Hom lattice");
    return *coords;
  };
  Cocycle2Table a_alpha2 = Cocycle2Table::zeros(g.order(), hom21.mod.ambient_rank());
  Cocycle2Table b_alpha1 = Cocycle2Table::zeros(g.order(), hom21.mod.ambient_rank());
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned u = 0; u < g.order(); ++u) {
      a_alpha2.at(s, u) = push_a(t2.alpha.at(s, u));
      b_alpha1.at(s, u) = push_b(t1.alpha.at(s, u));
    }
  {
    Cocycle2Table diff = Cocycle2Table::zeros(g.order(), hom21.mod.ambient_rank());
    for (unsigned s = 0; s < g.order(); ++s)
      for (unsigned u = 0; u < g.order(); ++u) diff.at(s, u) = a_alpha2.at(s, u) - b_alpha1.at(s, u);
    if (!cobounding_cochain_2(hom21.mod, diff))
      throw ClassMismatch("a(alpha_2) and b(alpha_1) differ in H^2(G, Hom(X2, A1))");
  }

  TNRho out;
  out.alg2 = tn_h1alg_context(t2, m);
  out.alg1 = tn_h1alg_context(t1, m);
  out.h2 = h1y_compute(out.alg2.ctx);
  out.h1 = h1y_compute(out.alg1.ctx);

  const std::size_t mr = m.ambient_rank();
  TensorModule ma1 = out.alg1.ma;  // M (x) A1

  // middle context: extension E2, coefficients M (x) A1, xi = (id (x) a) . xi2
  HomModule hk_m = hom_module(t2.hom_xa.mod, ma1.mod);
  IntMatrix xi_m = tautological_xi(mr, t2.x.ambient_rank(), t1.a.ambient_rank(), t2.hom_xa,
                                   [&a](const IntMatrix& f) { return a * f; }, hk_m);
  H1YContext ctx_mid = assemble_context(ExtensionData{t2.hom_xa.mod, t2.alpha}, ma1.mod,
                                        out.alg2.y.mod, hk_m, xi_m);
  H1YGroup h_mid = h1y_compute(ctx_mid);

  // F context: extension with kernel Hom(X2,A1) and cocycle a(alpha2)
  HomModule hk_f = hom_module(hom21.mod, ma1.mod);
  IntMatrix xi_f = tautological_xi(mr, t2.x.ambient_rank(), t1.a.ambient_rank(), hom21,
                                   [](const IntMatrix& f) { return f; }, hk_f);
  H1YContext ctx_f = assemble_context(ExtensionData{hom21.mod, a_alpha2}, ma1.mod, out.alg2.y.mod,
                                      hk_f, xi_f);
  H1YGroup h_f = h1y_compute(ctx_f);

  // E1-level context with Y2: kernel Hom(X1,A1), xi(y)(f) = m (x) f(b x)
  HomModule hk_12 = hom_module(t1.hom_xa.mod, ma1.mod);
  IntMatrix xi_12 = tautological_xi(mr, t2.x.ambient_rank(), t1.a.ambient_rank(), t1.hom_xa,
                                    [&b](const IntMatrix& f) { return f * b; }, hk_12);
  H1YContext ctx_12 = assemble_context(ExtensionData{t1.hom_xa.mod, t1.alpha}, ma1.mod,
                                       out.alg2.y.mod, hk_12, xi_12);
  H1YGroup h_12 = h1y_compute(ctx_12);

  // step 1: coefficient map id (x) a with g = id
  IntMatrix f_ida = IntMatrix::kronecker(IntMatrix::identity(mr), a);
  IntMatrix step1 = h1y_psi(out.alg2.ctx, out.h2, ctx_mid, h_mid, f_ida,
                            IntMatrix::identity(out.alg2.y.mod.ambient_rank()));

  // step 2: inverse of the pullback along a-tilde : E2 -> F
  IntMatrix astar(hom21.mod.ambient_rank(), t2.hom_xa.mod.ambient_rank());
  for (std::size_t k = 0; k < t2.hom_xa.mod.ambient_rank(); ++k)
    astar.set_column(k, push_a(unit_vec(t2.hom_xa.mod.ambient_rank(), k)));
  ExtensionMorphism mor_a = extension_morphism(ctx_mid.ext, ctx_f.ext, astar);
  if (twist_a)
    for (unsigned e = 0; e < g.order(); ++e) mor_a.delta[e] = mor_a.delta[e] + twist_a->val[e];
  IntMatrix pull_a = h1y_psi_prime(ctx_f, h_f, ctx_mid, h_mid, mor_a);
  IntMatrix step2 = invert_presented_iso(pull_a, h_f.group, h_mid.group);

  // step 3: pullback along b-tilde : E1 -> F
  IntMatrix bstar(hom21.mod.ambient_rank(), t1.hom_xa.mod.ambient_rank());
  for (std::size_t k = 0; k < t1.hom_xa.mod.ambient_rank(); ++k)
    bstar.set_column(k, push_b(unit_vec(t1.hom_xa.mod.ambient_rank(), k)));
  ExtensionMorphism mor_b = extension_morphism(ctx_12.ext, ctx_f.ext, bstar);
  if (twist_b)
    for (unsigned e = 0; e < g.order(); ++e) mor_b.delta[e] = mor_b.delta[e] + twist_b->val[e];
  IntMatrix step3 = h1y_psi_prime(ctx_f, h_f, ctx_12, h_12, mor_b);

  // step 4: change Y along id (x) b
  IntMatrix idb = IntMatrix::kronecker(IntMatrix::identity(mr), b);
  IntMatrix step4 = h1y_psi(ctx_12, h_12, out.alg1.ctx, out.h1,
                            IntMatrix::identity(ma1.mod.ambient_rank()), idb);

  out.rho = step4 * (step3 * (step2 * step1));
  out.idb_coinv = idb;
  IntMatrix lhs = out.rho * out.h2.c_matrix;
  IntMatrix rhs = out.h1.c_matrix * idb;
  out.c_square_commutes = presented_maps_equal(lhs, rhs, out.h1.group);
  return out;
}

Cocycle2Table standard_cyclic_cocycle_table(const FinGroup& g) {
  const unsigned n = g.order();
  unsigned gen = 0;
  for (unsigned e = 0; e < n; ++e)
    if (g.element_order(e) == n) {
      gen = e;
      break;
    }
  if (n > 1 && gen == 0) throw Error("group is not cyclic");
  std::vector<unsigned> power_of(n);
  unsigned cur = 0;
  for (unsigned k = 0; k < n; ++k) {
    power_of[cur] = k;
    cur = g.mul(cur, gen);
  }
  Cocycle2Table t = Cocycle2Table::zeros(n, 1);
  for (unsigned s = 0; s < n; ++s)
    for (unsigned u = 0; u < n; ++u)
      if (power_of[s] + power_of[u] >= n) t.at(s, u)[0] = 1;
  return t;
}

TNTriple cyclic_model_triple(const FinGroup& g) {
  return make_tn_triple(GModule::trivial(g, 1), GModule::trivial(g, 1),
                        standard_cyclic_cocycle_table(g));
}

}  // namespace tatekit
