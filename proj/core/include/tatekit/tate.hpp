#pragma once

#include <memory>

#include "tatekit/gmodule.hpp"

namespace tatekit {

/// Normalized inhomogeneous 1-cocycle table: one ambient value per group
/// element, value at the identity zero.
struct Cocycle1Table {
  std::vector<IntVec> val;
  const IntVec& at(unsigned g) const { return val[g]; }
};

/// Normalized inhomogeneous 2-cocycle table indexed by (sigma, tau).
struct Cocycle2Table {
  unsigned order = 0;
  std::vector<IntVec> val;  // sigma*order + tau
  const IntVec& at(unsigned s, unsigned t) const { return val[static_cast<std::size_t>(s) * order + t]; }
  IntVec& at(unsigned s, unsigned t) { return val[static_cast<std::size_t>(s) * order + t]; }
  static Cocycle2Table zeros(unsigned order, std::size_t rank) {
    Cocycle2Table c;
    c.order = order;
    c.val.assign(static_cast<std::size_t>(order) * order, IntVec(rank));
    return c;
  }
};

/// Tate cohomology of a finite group in one degree, as a presented group with
/// representative codecs.  Degrees -1 and 0 are computed from the norm map;
/// degrees 1 and 2 from normalized cocycle tables determined by their values
/// on generators.  Degrees beyond that window are reduced to the base cases
/// by tensoring with the augmentation ideal (raising the evaluation degree)
/// or with Z[G]/(norm) (lowering it); `shifted()` exposes the module the base
/// computation ran on.
class TateGroup {
public:
  int degree() const { return degree_; }
  const PresentedAbGroup& group() const { return group_; }
  const GModule& module() const { return *base_; }
  const GModule& shifted() const { return *shifted_; }
  int shifted_degree() const { return shifted_degree_; }

  // degree -1 (norm kernel inside coinvariants): elements are ambient vectors
  IntVec class_of_norm_kernel(const IntVec& ambient) const;
  IntVec norm_kernel_representative(const IntVec& cls) const;

  // degree 0 (invariants modulo norms): elements are invariant ambient vectors
  IntVec class_of_invariant(const IntVec& ambient) const;
  IntVec invariant_representative(const IntVec& cls) const;

  // degree 1
  IntVec class_of_cocycle1(const Cocycle1Table& z) const;
  Cocycle1Table cocycle1_representative(const IntVec& cls) const;
  Cocycle1Table expand_cocycle1(const IntVec& generator_values) const;

  // degree 2
  IntVec class_of_cocycle2(const Cocycle2Table& z) const;
  Cocycle2Table cocycle2_representative(const IntVec& cls) const;

  friend TateGroup tate_cohomology(const GModule& m, int degree, int window);

private:
  int degree_ = 0;
  int shifted_degree_ = 0;
  std::shared_ptr<const GModule> base_, shifted_;
  PresentedAbGroup group_;

  // shared internals for the base-degree computation on `shifted_`
  IntMatrix basis_;                      // lattice basis of cycles (meaning depends on degree)
  std::shared_ptr<SnfSolver> basis_solver_;
  IntMatrix inv_inclusion_;              // degree 0: invariant lattice basis
  std::vector<IntMatrix> expand_;        // degree 1: E_g; degree 2: F_{sigma,tau} flattened
};

TateGroup tate_cohomology(const GModule& m, int degree, int window = 3);

/// Whether a normalized 1-cocycle table is a coboundary, and a cobounding
/// element if so.
std::optional<IntVec> cobounding_element_1(const GModule& m, const Cocycle1Table& z);
/// Whether a normalized 2-cocycle table is a coboundary, and a cobounding
/// normalized 1-cochain (values per non-identity element) if so.
std::optional<std::vector<IntVec>> cobounding_cochain_2(const GModule& m, const Cocycle2Table& z);

bool is_cocycle1(const GModule& m, const Cocycle1Table& z);
bool is_cocycle2(const GModule& m, const Cocycle2Table& z);

Cocycle1Table coboundary1(const GModule& m, const IntVec& n);  // g -> (g-1)n
Cocycle2Table coboundary2(const GModule& m, const std::vector<IntVec>& cochain);  // normalized d^1

/// Cyclic-group oracle used by the test suites: independent 2-periodic
/// computation H^even = ker(sigma-1)/im(N), H^odd = ker(N)/im(sigma-1).
PresentedAbGroup cyclic_tate_oracle(const GModule& m, int degree, unsigned generator_element);

}  // namespace tatekit
