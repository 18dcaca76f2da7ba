#include "tatekit/gmodule.hpp"

#include <algorithm>

namespace tatekit {

namespace {

// columns of m reduced against a lattice membership test
bool columns_in_lattice(const IntMatrix& m, const SnfSolver* rel) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    IntVec c = m.column(j);
    if (rel ? !rel->contains(c) : !is_zero(c)) return false;
  }
  return true;
}

}  // namespace

GModule::GModule(const FinGroup& grp, PresentedAbGroup underlying,
                 std::vector<IntMatrix> action_per_element, bool verify)
    : grp_(std::make_shared<FinGroup>(grp)),
      underlying_(std::move(underlying)),
      action_(std::move(action_per_element)) {
  if (action_.size() != grp.order()) throw Error("one action matrix per group element required");
  for (const IntMatrix& a : action_)
    if (a.rows() != ambient_rank() || a.cols() != ambient_rank())
      throw Error("action matrix has wrong shape");
  if (verify) check_axioms();
}

void GModule::check_axioms() const {
  const std::size_t n = ambient_rank();
  const IntMatrix& rel = underlying_.relations();
  std::unique_ptr<SnfSolver> rel_solver;
  if (rel.cols() > 0) rel_solver = std::make_unique<SnfSolver>(rel);
  auto congruent = [&](const IntMatrix& x) { return columns_in_lattice(x, rel_solver.get()); };

  if (!congruent(action_[0] - IntMatrix::identity(n))) throw Error("identity must act as identity");
  for (unsigned g = 0; g < grp_->order(); ++g)
    if (rel.cols() > 0 && !columns_in_lattice(action_[g] * rel, rel_solver.get()))
      throw Error("action does not preserve the relation lattice");
  // homomorphism property on (generator, element) pairs determines the rest
  for (unsigned g = 0; g < grp_->order(); ++g)
    for (unsigned s : grp_->generators())
      if (!congruent(action_[s] * action_[g] - action_[grp_->mul(s, g)]))
        throw Error("action matrices are not a group homomorphism");
}

GModule GModule::trivial(const FinGroup& grp, std::size_t free_rank) {
  return trivial(grp, PresentedAbGroup::free_group(free_rank));
}

GModule GModule::trivial(const FinGroup& grp, PresentedAbGroup underlying) {
  std::vector<IntMatrix> acts(grp.order(), IntMatrix::identity(underlying.ambient_rank()));
  return GModule(grp, std::move(underlying), std::move(acts), false);
}

GModule GModule::from_generator_matrices(const FinGroup& grp, PresentedAbGroup underlying,
                                         const std::vector<IntMatrix>& generator_matrices) {
  if (generator_matrices.size() != grp.generators().size())
    throw Error("one matrix per group generator required");
  const std::size_t n = underlying.ambient_rank();
  std::vector<IntMatrix> acts(grp.order(), IntMatrix::identity(n));
  for (unsigned g = 1; g < grp.order(); ++g) {
    auto [par, slot] = grp.parent_edge(g);
    acts[g] = acts[par] * generator_matrices[slot];  // g = par * gen
  }
  return GModule(grp, std::move(underlying), std::move(acts), true);
}

GModule GModule::restricted_to(const SubgroupView& h) const {
  std::vector<IntMatrix> acts(h.group.order());
  for (unsigned k = 0; k < h.group.order(); ++k) acts[k] = action_[h.to_parent[k]];
  return GModule(h.group, underlying_, std::move(acts), false);
}

IntMatrix GModule::norm_matrix() const {
  IntMatrix n(ambient_rank(), ambient_rank());
  for (unsigned g = 0; g < grp_->order(); ++g) n = n + action_[g];
  return n;
}

bool map_descends(const GModule& a, const GModule& b, const IntMatrix& f) {
  if (f.rows() != b.ambient_rank() || f.cols() != a.ambient_rank()) return false;
  const IntMatrix& relB = b.relations();
  std::unique_ptr<SnfSolver> solver;
  if (relB.cols() > 0) solver = std::make_unique<SnfSolver>(relB);
  return columns_in_lattice(f * a.relations(), solver.get());
}

bool map_equivariant(const GModule& a, const GModule& b, const IntMatrix& f) {
  if (a.group() != b.group()) return false;
  const IntMatrix& relB = b.relations();
  std::unique_ptr<SnfSolver> solver;
  if (relB.cols() > 0) solver = std::make_unique<SnfSolver>(relB);
  for (unsigned s : a.group().generators())
    if (!columns_in_lattice(f * a.action(s) - b.action(s) * f, solver.get())) return false;
  return true;
}

GModule permutation_module(const GSet& x) {
  const FinGroup& g = x.group();
  std::vector<IntMatrix> acts(g.order(), IntMatrix(x.size(), x.size()));
  for (unsigned e = 0; e < g.order(); ++e)
    for (unsigned p = 0; p < x.size(); ++p) acts[e](x.act(e, p), p) = 1;
  return GModule(g, PresentedAbGroup::free_group(x.size()), std::move(acts), false);
}

ReducedPermModule reduced_permutation_module(const GSet& x) {
  if (x.size() == 0) throw EmptySet("reduced permutation module of an empty G-set");
  const FinGroup& g = x.group();
  const unsigned n = x.size();
  // basis b_i = x_0 - x_i (i = 1..n-1);  sigma(b_i) = b_{sigma(i)} - b_{sigma(0)}
  // with the convention b_0 = 0.
  std::vector<IntMatrix> acts(g.order(), IntMatrix(n - 1, n - 1));
  for (unsigned e = 0; e < g.order(); ++e) {
    unsigned s0 = x.act(e, 0);
    for (unsigned i = 1; i < n; ++i) {
      unsigned si = x.act(e, i);
      if (si != 0) acts[e](si - 1, i - 1) += 1;
      if (s0 != 0) acts[e](s0 - 1, i - 1) -= 1;
    }
  }
  ReducedPermModule out;
  out.mod = GModule(g, PresentedAbGroup::free_group(n - 1), std::move(acts), false);
  out.basis_in_full = IntMatrix(n, n - 1);
  for (unsigned i = 1; i < n; ++i) {
    out.basis_in_full(0, i - 1) = 1;
    out.basis_in_full(i, i - 1) = -1;
  }
  return out;
}

HomModule hom_module(const GModule& a, const GModule& m) {
  if (a.group() != m.group()) throw GroupMismatch("hom of modules over different groups");
  const FinGroup& g = a.group();
  const std::size_t ra = a.ambient_rank(), rm = m.ambient_rank();
  HomModule out;
  out.src_rank_ = ra;
  out.dst_rank_ = rm;

  // admissible matrices: H * relA has all columns in the lattice of relM
  const IntMatrix& relA = a.relations();
  const IntMatrix& relM = m.relations();
  IntMatrix L;
  if (relA.cols() == 0) {
    L = IntMatrix::identity(ra * rm);
  } else {
    IntMatrix cond = IntMatrix::kronecker(relA.transpose(), IntMatrix::identity(rm));
    IntMatrix target = relM.cols() ? IntMatrix::kronecker(IntMatrix::identity(relA.cols()), relM)
                                   : IntMatrix(rm * relA.cols(), 0);
    L = preimage_lattice(cond, target);
  }
  out.basis = L;
  out.basis_solver_ = std::make_shared<SnfSolver>(L);

  // relations: matrices of the form relM * W, i.e. columns of I (x) relM
  IntMatrix relcols = relM.cols() ? IntMatrix::kronecker(IntMatrix::identity(ra), relM)
                                  : IntMatrix(ra * rm, 0);
  IntMatrix rel_in_basis(L.cols(), relcols.cols());
  for (std::size_t j = 0; j < relcols.cols(); ++j) {
    auto c = out.basis_solver_->solve(relcols.column(j));
    if (!c) throw Error("internal: hom relation outside admissible lattice");
    rel_in_basis.set_column(j, *c);
  }

  // action: (g f) = actM(g) * H * actA(g^{-1}), transported to basis coordinates
  std::vector<IntMatrix> acts(g.order());
  for (unsigned e = 0; e < g.order(); ++e) {
    IntMatrix big = IntMatrix::kronecker(a.action(g.inv(e)).transpose(), m.action(e));
    IntMatrix moved = big * L;
    IntMatrix coords(L.cols(), L.cols());
    for (std::size_t j = 0; j < L.cols(); ++j) {
      auto c = out.basis_solver_->solve(moved.column(j));
      if (!c) throw Error("internal: hom action leaves admissible lattice");
      coords.set_column(j, *c);
    }
    acts[e] = std::move(coords);
  }
  out.mod = GModule(g, PresentedAbGroup(L.cols(), rel_in_basis), std::move(acts), false);
  return out;
}

IntMatrix HomModule::matrix_of(const IntVec& ambient_coords) const {
  IntVec v = basis * ambient_coords;
  IntMatrix h(dst_rank_, src_rank_);
  for (std::size_t j = 0; j < src_rank_; ++j)
    for (std::size_t i = 0; i < dst_rank_; ++i) h(i, j) = v[j * dst_rank_ + i];
  return h;
}

std::optional<IntVec> HomModule::coords_of(const IntMatrix& h) const {
  IntVec v(dst_rank_ * src_rank_);
  for (std::size_t j = 0; j < src_rank_; ++j)
    for (std::size_t i = 0; i < dst_rank_; ++i) v[j * dst_rank_ + i] = h(i, j);
  return basis_solver_->solve(v);
}

TensorModule tensor_module(const GModule& a, const GModule& m) {
  if (a.group() != m.group()) throw GroupMismatch("tensor of modules over different groups");
  const FinGroup& g = a.group();
  const std::size_t ra = a.ambient_rank(), rm = m.ambient_rank();
  IntMatrix rel = IntMatrix(ra * rm, 0);
  if (a.relations().cols())
    rel = IntMatrix::hcat(rel, IntMatrix::kronecker(a.relations(), IntMatrix::identity(rm)));
  if (m.relations().cols())
    rel = IntMatrix::hcat(rel, IntMatrix::kronecker(IntMatrix::identity(ra), m.relations()));
  std::vector<IntMatrix> acts(g.order());
  for (unsigned e = 0; e < g.order(); ++e) acts[e] = IntMatrix::kronecker(a.action(e), m.action(e));
  TensorModule out;
  out.lhs_rank = ra;
  out.rhs_rank = rm;
  out.mod = GModule(g, PresentedAbGroup(ra * rm, rel), std::move(acts), false);
  return out;
}

IntVec TensorModule::pure(const IntVec& a, const IntVec& m) const {
  IntVec v(lhs_rank * rhs_rank);
  for (std::size_t i = 0; i < lhs_rank; ++i)
    for (std::size_t j = 0; j < rhs_rank; ++j) v[i * rhs_rank + j] = a[i] * m[j];
  return v;
}

InvariantsResult invariants(const GModule& m) {
  const FinGroup& g = m.group();
  const std::size_t n = m.ambient_rank();
  InvariantsResult out;
  const auto& gens = g.generators();
  if (gens.empty()) {
    out.inclusion = IntMatrix::identity(n);
  } else {
    IntMatrix stack(0, n), targets(0, 0);
    const IntMatrix& rel = m.relations();
    for (unsigned s : gens) {
      stack = IntMatrix::vcat(stack, m.action(s) - IntMatrix::identity(n));
    }
    if (rel.cols() > 0) {
      // block-diagonal relation targets, one block per generator row group
      IntMatrix blocks(stack.rows(), rel.cols() * gens.size());
      for (std::size_t b = 0; b < gens.size(); ++b)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < rel.cols(); ++j) blocks(b * n + i, b * rel.cols() + j) = rel(i, j);
      out.inclusion = preimage_lattice(stack, blocks);
    } else {
      out.inclusion = kernel_lattice(stack);
    }
  }
  // group = L / relM, in basis coordinates
  SnfSolver lsolve(out.inclusion);
  const IntMatrix& rel = m.relations();
  IntMatrix rel_in_basis(out.inclusion.cols(), rel.cols());
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    auto c = lsolve.solve(rel.column(j));
    if (!c) throw Error("internal: relations not inside invariant lattice");
    rel_in_basis.set_column(j, *c);
  }
  out.group = PresentedAbGroup(out.inclusion.cols(), rel_in_basis);
  return out;
}

CoinvariantsResult coinvariants(const GModule& m) {
  const FinGroup& g = m.group();
  const std::size_t n = m.ambient_rank();
  IntMatrix rel = m.relations();
  for (unsigned s : g.generators()) rel = IntMatrix::hcat(rel, m.action(s) - IntMatrix::identity(n));
  CoinvariantsResult out;
  out.group = PresentedAbGroup(n, rel);
  return out;
}

NormMapResult norm_map(const GModule& m) {
  NormMapResult out;
  out.ambient = m.norm_matrix();
  out.inv = invariants(m);
  out.coinv = coinvariants(m);
  SnfSolver lsolve(out.inv.inclusion);
  const std::size_t n = m.ambient_rank();
  out.coinv_to_inv = IntMatrix(out.inv.inclusion.cols(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto c = lsolve.solve(out.ambient.column(j));
    if (!c) throw Error("internal: norm image not inside invariant lattice");
    out.coinv_to_inv.set_column(j, *c);
  }
  return out;
}

Coinduction coinduction(const FinGroup& g, const SubgroupView& h, const GModule& m0) {
  if (m0.group() != h.group) throw GroupMismatch("module must live over the subgroup view");
  Subgroup sub(g, h.to_parent);
  std::vector<unsigned> reps = sub.coset_representatives(Subgroup::Side::Right);
  std::vector<unsigned> rep_of(g.order());
  {
    std::vector<unsigned> all_rep = sub.right_coset_rep_of();
    rep_of = all_rep;
  }
  std::vector<int> rep_index(g.order(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

  const std::size_t r0 = m0.ambient_rank();
  const std::size_t nblocks = reps.size();
  const std::size_t n = nblocks * r0;

  // (g f)_j = actM0(p(r_j g)) f_{block of r_j g}
  std::vector<IntMatrix> acts(g.order(), IntMatrix(n, n));
  for (unsigned e = 0; e < g.order(); ++e) {
    for (std::size_t j = 0; j < nblocks; ++j) {
      unsigned t = g.mul(reps[j], e);
      unsigned rep_t = rep_of[t];
      unsigned hh = g.mul(t, g.inv(rep_t));  // in the subgroup
      int jj = rep_index[rep_t];
      const IntMatrix& a0 = m0.action(static_cast<unsigned>(h.from_parent[hh]));
      for (std::size_t x = 0; x < r0; ++x)
        for (std::size_t y = 0; y < r0; ++y)
          if (a0(x, y) != 0) acts[e](j * r0 + x, static_cast<std::size_t>(jj) * r0 + y) = a0(x, y);
    }
  }
  IntMatrix rel(n, 0);
  if (m0.relations().cols() > 0) {
    rel = IntMatrix(n, m0.relations().cols() * nblocks);
    for (std::size_t b = 0; b < nblocks; ++b)
      for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t j = 0; j < m0.relations().cols(); ++j)
          rel(b * r0 + i, b * m0.relations().cols() + j) = m0.relations()(i, j);
  }
  Coinduction out;
  out.mod = GModule(g, PresentedAbGroup(n, rel), std::move(acts), false);
  out.coset_reps = reps;
  out.epsilon = IntMatrix(r0, n);
  for (std::size_t i = 0; i < r0; ++i) out.epsilon(i, i) = 1;  // block of rep identity (index 0)
  out.section = IntMatrix(n, r0);
  for (std::size_t i = 0; i < r0; ++i) out.section(i, i) = 1;
  return out;
}

GModule regular_module(const FinGroup& g) {
  return permutation_module(GSet::regular(g));
}

GModule norm_quotient_module(const FinGroup& g) {
  const unsigned n = g.order();
  if (n == 1) return GModule::trivial(g, 0);
  // basis: classes of e_x for x != identity; e_1 = -sum of the others
  std::vector<IntMatrix> acts(n, IntMatrix(n - 1, n - 1));
  for (unsigned e = 0; e < n; ++e) {
    for (unsigned x = 1; x < n; ++x) {
      unsigned y = g.mul(e, x);
      if (y != 0) {
        acts[e](y - 1, x - 1) += 1;
      } else {
        for (unsigned z = 1; z < n; ++z) acts[e](z - 1, x - 1) -= 1;
      }
    }
  }
  return GModule(g, PresentedAbGroup::free_group(n - 1), std::move(acts), false);
}

GModule augmentation_ideal_module(const FinGroup& g) {
  const unsigned n = g.order();
  if (n == 1) return GModule::trivial(g, 0);
  // basis b_x = e_x - e_1 (x != 1); e * b_x = b_{ex} - b_e with b_1 = 0
  std::vector<IntMatrix> acts(n, IntMatrix(n - 1, n - 1));
  for (unsigned e = 0; e < n; ++e) {
    for (unsigned x = 1; x < n; ++x) {
      unsigned y = g.mul(e, x);
      if (y != 0) acts[e](y - 1, x - 1) += 1;
      if (e != 0) acts[e](e - 1, x - 1) -= 1;
    }
  }
  return GModule(g, PresentedAbGroup::free_group(n - 1), std::move(acts), false);
}

}  // namespace tatekit
