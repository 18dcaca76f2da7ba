#include "tatekit/cochains.hpp"

namespace tatekit {

Cocycle1Table restrict_cocycle1(const Cocycle1Table& z, const SubgroupView& h) {
  Cocycle1Table out;
  out.val.resize(h.group.order());
  for (unsigned k = 0; k < h.group.order(); ++k) out.val[k] = z.val[h.to_parent[k]];
  return out;
}

Cocycle2Table restrict_cocycle2(const Cocycle2Table& z, const SubgroupView& h) {
  Cocycle2Table out;
  out.order = h.group.order();
  out.val.resize(static_cast<std::size_t>(out.order) * out.order);
  for (unsigned a = 0; a < out.order; ++a)
    for (unsigned b = 0; b < out.order; ++b) out.at(a, b) = z.at(h.to_parent[a], h.to_parent[b]);
  return out;
}

Cocycle1Table corestrict_cocycle1(const GModule& m, const Subgroup& sub, const SubgroupView& h,
                                  const Cocycle1Table& z) {
  const FinGroup& g = m.group();
  const std::size_t a = m.ambient_rank();
  std::vector<unsigned> p = sub.retraction_to_subgroup();
  std::vector<unsigned> lreps = sub.coset_representatives(Subgroup::Side::Left);
  // homogeneous subgroup cochain: f(k0,k1) = k0 phi(k0^{-1} k1)
  auto f = [&](unsigned k0, unsigned k1) {
    unsigned arg = g.mul(g.inv(k0), k1);
    return m.action(k0) * z.val[static_cast<unsigned>(h.from_parent[arg])];
  };
  Cocycle1Table out;
  out.val.assign(g.order(), IntVec(a));
  for (unsigned e = 0; e < g.order(); ++e) {
    IntVec acc(a);
    for (unsigned y : lreps) {
      unsigned yi = g.inv(y);
      IntVec term = f(p[yi], p[g.mul(yi, e)]);
      acc = acc + m.action(y) * term;
    }
    out.val[e] = acc;
  }
  return out;
}

Cocycle2Table corestrict_cocycle2(const GModule& m, const Subgroup& sub, const SubgroupView& h,
                                  const Cocycle2Table& z) {
  const FinGroup& g = m.group();
  std::vector<unsigned> p = sub.retraction_to_subgroup();
  std::vector<unsigned> lreps = sub.coset_representatives(Subgroup::Side::Left);
  auto phi = [&](unsigned k0, unsigned k1) -> const IntVec& {
    return z.at(static_cast<unsigned>(h.from_parent[k0]), static_cast<unsigned>(h.from_parent[k1]));
  };
  // f(k0,k1,k2) = k0 phi(k0^{-1}k1, k1^{-1}k2)
  auto f = [&](unsigned k0, unsigned k1, unsigned k2) {
    return m.action(k0) * phi(g.mul(g.inv(k0), k1), g.mul(g.inv(k1), k2));
  };
  Cocycle2Table out = Cocycle2Table::zeros(g.order(), m.ambient_rank());
  for (unsigned e1 = 0; e1 < g.order(); ++e1)
    for (unsigned e2 = 0; e2 < g.order(); ++e2) {
      IntVec acc(m.ambient_rank());
      unsigned e12 = g.mul(e1, e2);
      for (unsigned y : lreps) {
        unsigned yi = g.inv(y);
        acc = acc + m.action(y) * f(p[yi], p[g.mul(yi, e1)], p[g.mul(yi, e12)]);
      }
      out.at(e1, e2) = acc;
    }
  return out;
}

Cocycle1Table hochschild_serre_1(const GModule& m, const Subgroup& k, const SubgroupView& h,
                                 unsigned x, const Cocycle1Table& z) {
  if (!k.is_normal()) throw NotNormal("Hochschild-Serre action needs a normal subgroup");
  const FinGroup& g = m.group();
  unsigned xi = g.inv(x);
  Cocycle1Table out;
  out.val.resize(h.group.order());
  for (unsigned e = 0; e < h.group.order(); ++e) {
    unsigned kk = h.to_parent[e];
    unsigned conj = g.mul(g.mul(xi, kk), x);
    out.val[e] = m.action(x) * z.val[static_cast<unsigned>(h.from_parent[conj])];
  }
  return out;
}

Cocycle2Table hochschild_serre_2(const GModule& m, const Subgroup& k, const SubgroupView& h,
                                 unsigned x, const Cocycle2Table& z) {
  if (!k.is_normal()) throw NotNormal("Hochschild-Serre action needs a normal subgroup");
  const FinGroup& g = m.group();
  unsigned xi = g.inv(x);
  auto conj = [&](unsigned e) {
    return static_cast<unsigned>(h.from_parent[g.mul(g.mul(xi, h.to_parent[e]), x)]);
  };
  Cocycle2Table out = Cocycle2Table::zeros(h.group.order(), m.ambient_rank());
  for (unsigned a = 0; a < h.group.order(); ++a)
    for (unsigned b = 0; b < h.group.order(); ++b) out.at(a, b) = m.action(x) * z.at(conj(a), conj(b));
  return out;
}

BilinearPairing tensor_pairing(const TensorModule& t, const GModule& lhs, const GModule& rhs) {
  BilinearPairing p;
  p.lhs = &lhs;
  p.rhs = &rhs;
  p.out = &t.mod;
  std::size_t lr = t.lhs_rank, rr = t.rhs_rank;
  p.eval = [lr, rr](const IntVec& a, const IntVec& b) {
    IntVec v(lr * rr);
    for (std::size_t i = 0; i < lr; ++i)
      for (std::size_t j = 0; j < rr; ++j) v[i * rr + j] = a[i] * b[j];
    return v;
  };
  return p;
}

Cocycle1Table cup_2_minus1(const BilinearPairing& p, const Cocycle2Table& a, const IntVec& b) {
  const GModule& rhs = *p.rhs;
  if (!rhs.underlying().element_is_zero(rhs.norm_matrix() * b))
    throw NormNotZero("cup with a (-1)-cocycle needs N b = 0");
  const FinGroup& g = p.out->group();
  Cocycle1Table out;
  out.val.assign(g.order(), IntVec(p.out->ambient_rank()));
  for (unsigned s = 0; s < g.order(); ++s) {
    IntVec acc(p.out->ambient_rank());
    for (unsigned t = 0; t < g.order(); ++t)
      acc = acc + p.eval(a.at(s, t), rhs.action(g.mul(s, t)) * b);
    out.val[s] = acc;
  }
  return out;
}

Cocycle1Table cup_2_minus1_alt(const BilinearPairing& p, const Cocycle2Table& a, const IntVec& b) {
  const GModule& rhs = *p.rhs;
  if (!rhs.underlying().element_is_zero(rhs.norm_matrix() * b))
    throw NormNotZero("cup with a (-1)-cocycle needs N b = 0");
  const FinGroup& g = p.out->group();
  const GModule& lhs = *p.lhs;
  Cocycle1Table out;
  out.val.assign(g.order(), IntVec(p.out->ambient_rank()));
  for (unsigned s = 0; s < g.order(); ++s) {
    IntVec acc(p.out->ambient_rank());
    for (unsigned t = 0; t < g.order(); ++t) {
      unsigned ti = g.inv(t);
      acc = acc + p.eval(lhs.action(ti) * a.at(t, s), rhs.action(ti) * b);
    }
    out.val[s] = acc;
  }
  return out;
}

Cocycle2Table cup_2_0(const BilinearPairing& p, const Cocycle2Table& a, const IntVec& b) {
  const GModule& rhs = *p.rhs;
  const FinGroup& g = p.out->group();
  Cocycle2Table out = Cocycle2Table::zeros(g.order(), p.out->ambient_rank());
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned t = 0; t < g.order(); ++t) out.at(s, t) = p.eval(a.at(s, t), rhs.action(g.mul(s, t)) * b);
  return out;
}

ExtensionData make_extension(GModule kernel, Cocycle2Table cocycle) {
  if (!is_cocycle2(kernel, cocycle)) throw Error("extension datum is not a normalized 2-cocycle");
  return ExtensionData{std::move(kernel), std::move(cocycle)};
}

ExtensionData split_extension(GModule kernel) {
  Cocycle2Table z = Cocycle2Table::zeros(kernel.group().order(), kernel.ambient_rank());
  return ExtensionData{std::move(kernel), std::move(z)};
}

bool is_ext_cocycle1(const ExtensionData& e, const GModule& m, const ExtCocycle1& z) {
  const FinGroup& g = m.group();
  const GModule& a = e.kernel;
  if (!map_descends(a, m, z.hom_part) || !map_equivariant(a, m, z.hom_part)) return false;
  if (!is_zero(z.section[0])) return false;
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned t = 0; t < g.order(); ++t) {
      IntVec lhs = z.section[s] + m.action(s) * z.section[t] - z.section[g.mul(s, t)];
      IntVec rhs = z.hom_part * e.cocycle.at(s, t);
      if (!m.underlying().elements_equal(lhs, rhs)) return false;
    }
  return true;
}

ExtCocycle1 corestrict_hom_to_extension(const ExtensionData& e, const GModule& m,
                                        const IntMatrix& mu) {
  const FinGroup& g = m.group();
  const GModule& a = e.kernel;
  ExtCocycle1 out;
  // (N_G mu) = sum_tau  tau_M mu tau_A^{-1}
  out.hom_part = IntMatrix(m.ambient_rank(), a.ambient_rank());
  for (unsigned t = 0; t < g.order(); ++t)
    out.hom_part = out.hom_part + m.action(t) * mu * a.action(g.inv(t));
  out.section.assign(g.order(), IntVec(m.ambient_rank()));
  for (unsigned s = 0; s < g.order(); ++s) {
    IntVec acc(m.ambient_rank());
    for (unsigned t = 0; t < g.order(); ++t) acc = acc + m.action(g.inv(t)) * (mu * e.cocycle.at(t, s));
    out.section[s] = acc;
  }
  return out;
}

ExtensionMorphism extension_morphism(const ExtensionData& from, const ExtensionData& to,
                                     const IntMatrix& h) {
  if (!map_descends(from.kernel, to.kernel, h) || !map_equivariant(from.kernel, to.kernel, h))
    throw SquareDoesNotCommute("kernel map is not a G-map");
  const FinGroup& g = to.kernel.group();
  // need delta with d delta = h(alpha_from) - alpha_to
  Cocycle2Table diff = Cocycle2Table::zeros(g.order(), to.kernel.ambient_rank());
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned t = 0; t < g.order(); ++t)
      diff.at(s, t) = h * from.cocycle.at(s, t) - to.cocycle.at(s, t);
  auto chain = cobounding_cochain_2(to.kernel, diff);
  if (!chain) throw ClassMismatch("extension classes differ; no morphism over this kernel map");
  ExtensionMorphism out;
  out.h = h;
  out.delta.assign(g.order(), IntVec(to.kernel.ambient_rank()));
  for (unsigned e = 1; e < g.order(); ++e) out.delta[e] = (*chain)[e - 1];
  return out;
}

ExtCocycle1 pullback_ext_cocycle(const ExtensionMorphism& mor, const ExtensionData& from,
                                 const ExtensionData& to, const GModule& m, const ExtCocycle1& z) {
  (void)from;
  (void)to;
  const FinGroup& g = m.group();
  ExtCocycle1 out;
  out.hom_part = z.hom_part * mor.h;
  out.section.assign(g.order(), IntVec(m.ambient_rank()));
  for (unsigned s = 0; s < g.order(); ++s) out.section[s] = z.section[s] + z.hom_part * mor.delta[s];
  return out;
}

Cocycle1Table shapiro_cocycle1(const Coinduction& r, const SubgroupView& h, const Cocycle1Table& z) {
  Cocycle1Table res = restrict_cocycle1(z, h);
  for (IntVec& v : res.val) v = r.epsilon * v;
  return res;
}

Cocycle2Table shapiro_cocycle2(const Coinduction& r, const SubgroupView& h, const Cocycle2Table& z) {
  Cocycle2Table res = restrict_cocycle2(z, h);
  for (IntVec& v : res.val) v = r.epsilon * v;
  return res;
}

}  // namespace tatekit
