#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tatekit/perm_group.hpp"
#include "tatekit/presented_group.hpp"

namespace tatekit {

/// Finitely generated module over a finite group: a presented abelian group
/// together with one ambient action matrix per group element.  Matrices
/// satisfy the module axioms modulo the relation lattice.
class GModule {
public:
  GModule() = default;
  GModule(const FinGroup& grp, PresentedAbGroup underlying, std::vector<IntMatrix> action_per_element,
          bool verify = true);

  static GModule trivial(const FinGroup& grp, std::size_t free_rank);
  static GModule trivial(const FinGroup& grp, PresentedAbGroup underlying);
  static GModule from_generator_matrices(const FinGroup& grp, PresentedAbGroup underlying,
                                         const std::vector<IntMatrix>& generator_matrices);
  static GModule zero(const FinGroup& grp) { return trivial(grp, 0); }

  const FinGroup& group() const { return *grp_; }
  const PresentedAbGroup& underlying() const { return underlying_; }
  std::size_t ambient_rank() const { return underlying_.ambient_rank(); }
  const IntMatrix& action(unsigned g) const { return action_[g]; }
  const IntMatrix& relations() const { return underlying_.relations(); }
  bool is_torsion_free() const { return underlying_.torsion().empty(); }

  /// The same underlying group viewed over a subgroup.
  GModule restricted_to(const SubgroupView& h) const;

  /// Sum over all group elements of the action matrices.
  IntMatrix norm_matrix() const;

private:
  void check_axioms() const;

  std::shared_ptr<const FinGroup> grp_;
  PresentedAbGroup underlying_;
  std::vector<IntMatrix> action_;
};

/// f : A -> B given by an ambient matrix.
struct GModuleMap {
  IntMatrix ambient;
};
bool map_descends(const GModule& a, const GModule& b, const IntMatrix& f);
bool map_equivariant(const GModule& a, const GModule& b, const IntMatrix& f);

/// Z[X] with the permuted basis.
GModule permutation_module(const GSet& x);

/// Z[X]_0, the augmentation kernel, with the explicit basis x_0 - x_i
/// (i = 1..n-1, x_0 the first point).  `basis_in_full` embeds it into Z[X].
struct ReducedPermModule {
  GModule mod;
  IntMatrix basis_in_full;  // |X| x (|X|-1)
};
ReducedPermModule reduced_permutation_module(const GSet& x);

/// A presented-module model of Hom(A, M) with (g f)(a) = g(f(g^{-1} a)).
/// Elements are classes of dst_amb x src_amb integer matrices; `basis` holds
/// a lattice basis of the admissible matrices in column-major vec form.
class HomModule {
public:
  GModule mod;
  IntMatrix basis;

  IntMatrix matrix_of(const IntVec& ambient_coords) const;
  std::optional<IntVec> coords_of(const IntMatrix& h) const;
  std::size_t src_rank() const { return src_rank_; }
  std::size_t dst_rank() const { return dst_rank_; }

  friend HomModule hom_module(const GModule& a, const GModule& m);

private:
  std::size_t src_rank_ = 0, dst_rank_ = 0;
  std::shared_ptr<SnfSolver> basis_solver_;
};
HomModule hom_module(const GModule& a, const GModule& m);

/// A (x) M with g(a (x) m) = ga (x) gm; ambient index (i, j) -> i*rank(M)+j.
struct TensorModule {
  GModule mod;
  std::size_t lhs_rank = 0, rhs_rank = 0;
  IntVec pure(const IntVec& a, const IntVec& m) const;
};
TensorModule tensor_module(const GModule& a, const GModule& m);

struct InvariantsResult {
  PresentedAbGroup group;
  IntMatrix inclusion;  // ambient(M) x k, columns a basis of the invariant lattice
};
InvariantsResult invariants(const GModule& m);

struct CoinvariantsResult {
  PresentedAbGroup group;  // same ambient as M; projection is the identity matrix
};
CoinvariantsResult coinvariants(const GModule& m);

struct NormMapResult {
  IntMatrix ambient;       // amb x amb, sum of all action matrices
  IntMatrix coinv_to_inv;  // k x amb: the norm in invariant coordinates
  InvariantsResult inv;
  CoinvariantsResult coinv;
};
NormMapResult norm_map(const GModule& m);

/// Coinduction R(M0) from a subgroup to G, with both adjunction maps.
struct Coinduction {
  GModule mod;          // over G
  IntMatrix epsilon;    // amb(R) -> amb(M0): evaluation at the identity
  IntMatrix section;    // amb(M0) -> amb(R): the splitting j with eps . j = id
  std::vector<unsigned> coset_reps;  // right-coset representatives used for blocks
};
Coinduction coinduction(const FinGroup& g, const SubgroupView& h, const GModule& m0);

/// Z[G] with left translation, J = Z[G]/(norm vector) and the augmentation
/// ideal I, both in explicit free bases with entries in {0, +-1}.
GModule regular_module(const FinGroup& g);
GModule norm_quotient_module(const FinGroup& g);      // J, basis = classes of e_g, g != 1
GModule augmentation_ideal_module(const FinGroup& g); // I, basis = e_g - e_1, g != 1

}  // namespace tatekit
