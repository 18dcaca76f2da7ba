#include "tatekit/tate.hpp"

namespace tatekit {

namespace {

IntMatrix blockdiag(const IntMatrix& b, std::size_t copies) {
  IntMatrix r(b.rows() * copies, b.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(c * b.rows() + i, c * b.cols() + j) = b(i, j);
  return r;
}

// selector matrix picking block `slot` out of `nblocks` blocks of size `a`
IntMatrix selector(std::size_t nblocks, std::size_t a, std::size_t slot) {
  IntMatrix s(a, nblocks * a);
  for (std::size_t i = 0; i < a; ++i) s(i, slot * a + i) = 1;
  return s;
}

IntMatrix coords_of_columns(const SnfSolver& solver, const IntMatrix& cols, const char* what) {
  IntMatrix out(solver.snf().V.rows(), cols.cols());
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    auto c = solver.solve(cols.column(j));
    if (!c) throw Error(std::string("internal: column outside lattice in ") + what);
    out.set_column(j, *c);
  }
  return out;
}

}  // namespace

TateGroup tate_cohomology(const GModule& m, int degree, int window) {
  if (window > 5) throw WindowTooWide("degree window capped at 5");
  if (degree > window || degree < -window) throw DegreeOutOfWindow("degree outside configured window");

  TateGroup t;
  t.degree_ = degree;
  t.base_ = std::make_shared<GModule>(m);

  // reduce to a base degree in {-1, 0, 1, 2}
  GModule work = m;
  int d = degree;
  while (d < -1) {
    work = tensor_module(augmentation_ideal_module(m.group()), work).mod;
    ++d;
  }
  while (d > 2) {
    work = tensor_module(norm_quotient_module(m.group()), work).mod;
    --d;
  }
  t.shifted_ = std::make_shared<GModule>(std::move(work));
  t.shifted_degree_ = d;

  const GModule& w = *t.shifted_;
  const FinGroup& g = w.group();
  const std::size_t a = w.ambient_rank();
  const IntMatrix& rel = w.relations();
  const auto& gens = g.generators();
  const std::size_t k = gens.size();

  if (d == -1) {
    // ker(N : M_G -> M^G) = {x : Nx in rel} / (rel + (g-1)-images)
    IntMatrix basis = preimage_lattice(w.norm_matrix(), rel);
    SnfSolver solver(basis);
    IntMatrix killers = rel;
    for (unsigned s : gens) killers = IntMatrix::hcat(killers, (w.action(s) - IntMatrix::identity(a)));
    t.group_ = PresentedAbGroup(basis.cols(), coords_of_columns(solver, killers, "H^-1"));
    t.basis_ = std::move(basis);
    t.basis_solver_ = std::make_shared<SnfSolver>(t.basis_);
  } else if (d == 0) {
    // coker(N : M_G -> M^G) = invariants / (rel + N-images)
    InvariantsResult inv = invariants(w);
    SnfSolver solver(inv.inclusion);
    IntMatrix killers = IntMatrix::hcat(rel, w.norm_matrix());
    t.group_ = PresentedAbGroup(inv.inclusion.cols(), coords_of_columns(solver, killers, "H^0"));
    t.inv_inclusion_ = inv.inclusion;
    t.basis_ = t.inv_inclusion_;
    t.basis_solver_ = std::make_shared<SnfSolver>(t.basis_);
  } else if (d == 1) {
    // cocycles determined by generator values
    if (k == 0) {
      t.group_ = PresentedAbGroup(0, IntMatrix(0, 0));
      t.basis_ = IntMatrix(0, 0);
      t.basis_solver_ = std::make_shared<SnfSolver>(t.basis_);
      t.expand_.assign(g.order(), IntMatrix(a, 0));
      return t;
    }
    std::vector<IntMatrix> E(g.order(), IntMatrix(a, k * a));
    for (unsigned e = 1; e < g.order(); ++e) {
      auto [par, slot] = g.parent_edge(e);
      E[e] = E[par] + w.action(par) * selector(k, a, slot);
    }
    IntMatrix cond(0, k * a);
    for (unsigned e = 0; e < g.order(); ++e)
      for (std::size_t s = 0; s < k; ++s) {
        IntMatrix row = E[g.mul(e, gens[s])] - E[e] - w.action(e) * selector(k, a, s);
        if (!row.is_zero()) cond = IntMatrix::vcat(cond, row);
      }
    IntMatrix basis = rel.cols() && cond.rows()
                          ? preimage_lattice(cond, blockdiag(rel, cond.rows() / a))
                          : (cond.rows() ? kernel_lattice(cond) : IntMatrix::identity(k * a));
    SnfSolver solver(basis);
    IntMatrix cb(k * a, a);
    for (std::size_t s = 0; s < k; ++s) {
      IntMatrix block = w.action(gens[s]) - IntMatrix::identity(a);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) cb(s * a + i, j) = block(i, j);
    }
    IntMatrix killers = IntMatrix::hcat(cb, blockdiag(rel, k));
    t.group_ = PresentedAbGroup(basis.cols(), coords_of_columns(solver, killers, "H^1"));
    t.basis_ = std::move(basis);
    t.basis_solver_ = std::make_shared<SnfSolver>(t.basis_);
    t.expand_ = std::move(E);
  } else {
    // d == 2: cocycles determined by values at (sigma, generator)
    const unsigned n = g.order();
    if (k == 0) {
      t.group_ = PresentedAbGroup(0, IntMatrix(0, 0));
      t.basis_ = IntMatrix(0, 0);
      t.basis_solver_ = std::make_shared<SnfSolver>(t.basis_);
      t.expand_.assign(static_cast<std::size_t>(n) * n, IntMatrix(a, 0));
      return t;
    }
    const std::size_t unknowns = static_cast<std::size_t>(n) * k * a;
    auto sel = [&](unsigned sigma, std::size_t slot) {
      return selector(static_cast<std::size_t>(n) * k, a, static_cast<std::size_t>(sigma) * k + slot);
    };
    // F[sigma][tau] expands a_{sigma,tau} from the unknown vector
    std::vector<IntMatrix> F(static_cast<std::size_t>(n) * n);
    for (unsigned sigma = 0; sigma < n; ++sigma) {
      F[static_cast<std::size_t>(sigma) * n + 0] = IntMatrix(a, unknowns);
      for (unsigned tau = 1; tau < n; ++tau) {
        auto [par, slot] = g.parent_edge(tau);
        F[static_cast<std::size_t>(sigma) * n + tau] =
            F[static_cast<std::size_t>(sigma) * n + par] + sel(g.mul(sigma, par), slot) -
            w.action(sigma) * sel(par, slot);
      }
    }
    IntMatrix cond(0, unknowns);
    std::vector<IntMatrix> rows;
    for (std::size_t s = 0; s < k; ++s) rows.push_back(sel(0, s));  // normalization a_{1,gen} = 0
    for (unsigned sigma = 0; sigma < n; ++sigma)
      for (unsigned tau = 0; tau < n; ++tau)
        for (std::size_t s = 0; s < k; ++s) {
          IntMatrix row = w.action(sigma) * sel(tau, s) - sel(g.mul(sigma, tau), s) +
                          F[static_cast<std::size_t>(sigma) * n + g.mul(tau, gens[s])] -
                          F[static_cast<std::size_t>(sigma) * n + tau];
          if (!row.is_zero()) rows.push_back(std::move(row));
        }
    std::size_t total = 0;
    for (const auto& r : rows) total += r.rows();
    cond = IntMatrix(total, unknowns);
    std::size_t at = 0;
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j) cond(at + i, j) = r(i, j);
      at += r.rows();
    }
    IntMatrix basis = rel.cols() ? preimage_lattice(cond, blockdiag(rel, cond.rows() / a))
                                 : kernel_lattice(cond);
    SnfSolver solver(basis);
    // coboundaries of normalized 1-cochains (values on non-identity elements)
    IntMatrix cb(unknowns, static_cast<std::size_t>(n - 1) * a);
    for (unsigned sigma = 0; sigma < n; ++sigma)
      for (std::size_t s = 0; s < k; ++s) {
        unsigned ge = gens[s];
        unsigned prod = g.mul(sigma, ge);
        // d(n)_{sigma,ge} = sigma n_{ge} - n_{sigma ge} + n_sigma
        for (std::size_t col_e = 1; col_e < n; ++col_e)
          for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) {
              Int cval = 0;
              if (col_e == ge) cval += w.action(sigma)(i, j);
              if (col_e == prod && i == j) cval -= 1;
              if (col_e == sigma && i == j) cval += 1;
              if (cval != 0)
                cb((static_cast<std::size_t>(sigma) * k + s) * a + i, (col_e - 1) * a + j) += cval;
            }
      }
    IntMatrix killers = IntMatrix::hcat(cb, blockdiag(rel, static_cast<std::size_t>(n) * k));
    t.group_ = PresentedAbGroup(basis.cols(), coords_of_columns(solver, killers, "H^2"));
    t.basis_ = std::move(basis);
    t.basis_solver_ = std::make_shared<SnfSolver>(t.basis_);
    t.expand_ = std::move(F);
  }
  return t;
}

IntVec TateGroup::class_of_norm_kernel(const IntVec& ambient) const {
  if (shifted_degree_ != -1) throw Error("not a degree -1 presentation");
  auto c = basis_solver_->solve(ambient);
  if (!c) throw Error("vector is not in the norm kernel modulo relations");
  return *c;
}
IntVec TateGroup::norm_kernel_representative(const IntVec& cls) const {
  if (shifted_degree_ != -1) throw Error("not a degree -1 presentation");
  return basis_ * cls;
}

IntVec TateGroup::class_of_invariant(const IntVec& ambient) const {
  if (shifted_degree_ != 0) throw Error("not a degree 0 presentation");
  auto c = basis_solver_->solve(ambient);
  if (!c) throw Error("vector is not invariant modulo relations");
  return *c;
}
IntVec TateGroup::invariant_representative(const IntVec& cls) const {
  if (shifted_degree_ != 0) throw Error("not a degree 0 presentation");
  return basis_ * cls;
}

IntVec TateGroup::class_of_cocycle1(const Cocycle1Table& z) const {
  if (shifted_degree_ != 1) throw Error("not a degree 1 presentation");
  const FinGroup& g = shifted_->group();
  const std::size_t a = shifted_->ambient_rank();
  const auto& gens = g.generators();
  IntVec u(gens.size() * a);
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t i = 0; i < a; ++i) u[s * a + i] = z.val[gens[s]][i];
  auto c = basis_solver_->solve(u);
  if (!c) throw Error("table is not a 1-cocycle modulo relations");
  return *c;
}

Cocycle1Table TateGroup::expand_cocycle1(const IntVec& generator_values) const {
  if (shifted_degree_ != 1) throw Error("not a degree 1 presentation");
  const FinGroup& g = shifted_->group();
  Cocycle1Table out;
  out.val.resize(g.order());
  for (unsigned e = 0; e < g.order(); ++e) out.val[e] = expand_[e] * generator_values;
  return out;
}

Cocycle1Table TateGroup::cocycle1_representative(const IntVec& cls) const {
  return expand_cocycle1(basis_ * cls);
}

IntVec TateGroup::class_of_cocycle2(const Cocycle2Table& z) const {
  if (shifted_degree_ != 2) throw Error("not a degree 2 presentation");
  const FinGroup& g = shifted_->group();
  const std::size_t a = shifted_->ambient_rank();
  const auto& gens = g.generators();
  IntVec u(static_cast<std::size_t>(g.order()) * gens.size() * a);
  for (unsigned sigma = 0; sigma < g.order(); ++sigma)
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (std::size_t i = 0; i < a; ++i)
        u[(static_cast<std::size_t>(sigma) * gens.size() + s) * a + i] = z.at(sigma, gens[s])[i];
  auto c = basis_solver_->solve(u);
  if (!c) throw Error("table is not a 2-cocycle modulo relations");
  return *c;
}

Cocycle2Table TateGroup::cocycle2_representative(const IntVec& cls) const {
  if (shifted_degree_ != 2) throw Error("not a degree 2 presentation");
  const FinGroup& g = shifted_->group();
  IntVec u = basis_ * cls;
  Cocycle2Table out = Cocycle2Table::zeros(g.order(), shifted_->ambient_rank());
  for (unsigned sigma = 0; sigma < g.order(); ++sigma)
    for (unsigned tau = 0; tau < g.order(); ++tau)
      out.at(sigma, tau) = expand_[static_cast<std::size_t>(sigma) * g.order() + tau] * u;
  return out;
}

bool is_cocycle1(const GModule& m, const Cocycle1Table& z) {
  const FinGroup& g = m.group();
  const auto& gr = m.underlying();
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned t = 0; t < g.order(); ++t) {
      IntVec lhs = z.val[s] + m.action(s) * z.val[t] - z.val[g.mul(s, t)];
      if (!gr.element_is_zero(lhs)) return false;
    }
  return true;
}

bool is_cocycle2(const GModule& m, const Cocycle2Table& z) {
  const FinGroup& g = m.group();
  const auto& gr = m.underlying();
  for (unsigned s = 0; s < g.order(); ++s) {
    if (!is_zero(z.at(s, 0)) || !is_zero(z.at(0, s))) return false;
    for (unsigned t = 0; t < g.order(); ++t)
      for (unsigned u = 0; u < g.order(); ++u) {
        IntVec lhs = m.action(s) * z.at(t, u) - z.at(g.mul(s, t), u) + z.at(s, g.mul(t, u)) - z.at(s, t);
        if (!gr.element_is_zero(lhs)) return false;
      }
  }
  return true;
}

Cocycle1Table coboundary1(const GModule& m, const IntVec& n) {
  Cocycle1Table out;
  out.val.resize(m.group().order());
  for (unsigned e = 0; e < m.group().order(); ++e) out.val[e] = m.action(e) * n - n;
  return out;
}

Cocycle2Table coboundary2(const GModule& m, const std::vector<IntVec>& cochain) {
  const FinGroup& g = m.group();
  const std::size_t a = m.ambient_rank();
  auto value = [&](unsigned e) { return e == 0 ? IntVec(a) : cochain[e - 1]; };
  Cocycle2Table out = Cocycle2Table::zeros(g.order(), a);
  for (unsigned s = 0; s < g.order(); ++s)
    for (unsigned t = 0; t < g.order(); ++t)
      out.at(s, t) = m.action(s) * value(t) - value(g.mul(s, t)) + value(s);
  return out;
}

std::optional<IntVec> cobounding_element_1(const GModule& m, const Cocycle1Table& z) {
  const FinGroup& g = m.group();
  const std::size_t a = m.ambient_rank();
  const auto& gens = g.generators();
  const IntMatrix& rel = m.relations();
  // solve (A(s)-I) n = z_s mod rel for all generators simultaneously
  IntMatrix lhs(0, a);
  IntVec rhs;
  for (unsigned s : gens) {
    lhs = IntMatrix::vcat(lhs, m.action(s) - IntMatrix::identity(a));
    for (const Int& v : z.val[s]) rhs.push_back(v);
  }
  if (gens.empty()) return IntVec(a);
  IntMatrix full = rel.cols() ? IntMatrix::hcat(lhs, -blockdiag(rel, gens.size())) : lhs;
  auto sol = solve(full, rhs);
  if (!sol) return std::nullopt;
  IntVec n(sol->begin(), sol->begin() + a);
  return n;
}

std::optional<std::vector<IntVec>> cobounding_cochain_2(const GModule& m, const Cocycle2Table& z) {
  const FinGroup& g = m.group();
  const std::size_t a = m.ambient_rank();
  const unsigned n = g.order();
  if (n == 1) return std::vector<IntVec>{};
  const IntMatrix& rel = m.relations();
  // unknowns: normalized 1-cochain values at non-identity elements
  // equations: d(c)_{sigma,tau} = z_{sigma,tau} at (sigma, generator) slots;
  // by the expansion recursion these determine the rest.
  const auto& gens = g.generators();
  const std::size_t unknowns = static_cast<std::size_t>(n - 1) * a;
  std::size_t neq = static_cast<std::size_t>(n) * gens.size();
  IntMatrix lhs(neq * a, unknowns);
  IntVec rhs(neq * a);
  std::size_t row = 0;
  for (unsigned sigma = 0; sigma < n; ++sigma)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      unsigned ge = gens[s];
      unsigned prod = g.mul(sigma, ge);
      // sigma c_{ge} - c_{sigma ge} + c_sigma = z_{sigma, ge}
      for (std::size_t i = 0; i < a; ++i) {
        if (ge != 0)
          for (std::size_t j = 0; j < a; ++j)
            if (m.action(sigma)(i, j) != 0) lhs(row + i, (ge - 1) * a + j) += m.action(sigma)(i, j);
        if (prod != 0) lhs(row + i, (prod - 1) * a + i) -= 1;
        if (sigma != 0) lhs(row + i, (sigma - 1) * a + i) += 1;
        rhs[row + i] = z.at(sigma, ge)[i];
      }
      row += a;
    }
  IntMatrix full = rel.cols() ? IntMatrix::hcat(lhs, -blockdiag(rel, neq)) : lhs;
  auto sol = solve(full, rhs);
  if (!sol) return std::nullopt;
  std::vector<IntVec> out(n - 1, IntVec(a));
  for (unsigned e = 1; e < n; ++e)
    for (std::size_t i = 0; i < a; ++i) out[e - 1][i] = (*sol)[(e - 1) * a + i];
  // the generator-slot equations pin the coboundary on all slots that
  // determine a cocycle; verify the rest holds modulo relations
  Cocycle2Table check = coboundary2(m, out);
  for (unsigned s = 0; s < n; ++s)
    for (unsigned t = 0; t < n; ++t)
      if (!m.underlying().element_is_zero(check.at(s, t) - z.at(s, t))) return std::nullopt;
  return out;
}

PresentedAbGroup cyclic_tate_oracle(const GModule& m, int degree, unsigned generator_element) {
  const std::size_t a = m.ambient_rank();
  IntMatrix sigma = m.action(generator_element);
  IntMatrix nmat = m.norm_matrix();
  const IntMatrix& rel = m.relations();
  IntMatrix smin1 = sigma - IntMatrix::identity(a);
  bool even = ((degree % 2) + 2) % 2 == 0;
  const IntMatrix& kerof = even ? smin1 : nmat;
  const IntMatrix& imof = even ? nmat : smin1;
  IntMatrix basis = preimage_lattice(kerof, rel);
  SnfSolver solver(basis);
  IntMatrix killers = IntMatrix::hcat(rel, imof);
  IntMatrix coords(basis.cols(), killers.cols());
  for (std::size_t j = 0; j < killers.cols(); ++j) {
    auto c = solver.solve(killers.column(j));
    if (!c) throw Error("internal: cyclic oracle image outside kernel");
    coords.set_column(j, *c);
  }
  return PresentedAbGroup(basis.cols(), coords);
}

}  // namespace tatekit
