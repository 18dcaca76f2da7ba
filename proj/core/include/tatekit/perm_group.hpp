#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tatekit/errors.hpp"

namespace tatekit {

using Perm = std::vector<unsigned>;  // images of 0..degree-1

Perm perm_compose(const Perm& p, const Perm& q);  // (p*q)(x) = p(q(x))
Perm perm_inverse(const Perm& p);
Perm perm_identity(unsigned degree);

/// Finite group given by permutation generators.  Elements are canonical
/// indices 0..order-1 with the identity at 0; the ordering is fixed by BFS
/// over the generator list, so labels are reproducible.
class FinGroup {
public:
  static constexpr unsigned kDefaultMaxOrder = 64;

  FinGroup();  // trivial group

  unsigned order() const { return order_; }
  unsigned degree() const { return degree_; }
  unsigned mul(unsigned g, unsigned h) const { return mul_[g * order_ + h]; }
  unsigned inv(unsigned g) const { return inv_[g]; }
  const std::vector<unsigned>& generators() const { return gens_; }
  const Perm& perm_of(unsigned g) const { return elems_[g]; }
  bool is_abelian() const;

  /// Word in generator indices reaching g along the BFS spanning tree.
  std::vector<unsigned> word_of(unsigned g) const;
  /// BFS parent edge of a non-identity element: g = parent * generator.
  std::pair<unsigned, unsigned> parent_edge(unsigned g) const { return bfs_edge_[g]; }

  unsigned element_order(unsigned g) const;

  /// Structural equality: same canonical multiplication table.
  bool operator==(const FinGroup& o) const { return order_ == o.order_ && mul_ == o.mul_; }
  bool operator!=(const FinGroup& o) const { return !(*this == o); }

  friend FinGroup group_from_permutations(unsigned degree, const std::vector<Perm>& generators,
                                          unsigned max_order);

private:
  unsigned order_ = 1;
  unsigned degree_ = 0;
  std::vector<unsigned> mul_, inv_, gens_;
  std::vector<Perm> elems_;
  std::vector<std::pair<unsigned, unsigned>> bfs_edge_;  // (parent, generator slot)
};

FinGroup group_from_permutations(unsigned degree, const std::vector<Perm>& generators,
                                 unsigned max_order = FinGroup::kDefaultMaxOrder);

class Subgroup {
public:
  Subgroup(const FinGroup& parent, std::vector<unsigned> members);
  static Subgroup generated_by(const FinGroup& parent, const std::vector<unsigned>& gens);
  static Subgroup trivial(const FinGroup& parent) { return generated_by(parent, {}); }
  static Subgroup full(const FinGroup& parent);

  const FinGroup& parent() const { return *parent_; }
  const std::vector<unsigned>& members() const { return members_; }
  bool contains(unsigned g) const { return in_sub_[g]; }
  unsigned order() const { return static_cast<unsigned>(members_.size()); }
  unsigned index() const { return parent_->order() / order(); }
  bool is_normal() const;
  bool is_cyclic() const;
  bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && members_ == o.members_; }

  /// Representatives, one per coset, identity first.  side "left": cosets gH;
  /// side "right": cosets Hg.
  enum class Side { Left, Right };
  std::vector<unsigned> coset_representatives(Side side) const;
  /// For right cosets Hg with representatives r(g): the retraction
  /// p(g) = g * r(g)^{-1} lies in H and satisfies p(kg) = k p(g) for k in H.
  std::vector<unsigned> retraction_to_subgroup() const;
  /// Index of the coset representative of g (right cosets Hg).
  std::vector<unsigned> right_coset_rep_of() const;

private:
  std::shared_ptr<const FinGroup> parent_;
  std::vector<unsigned> members_;
  std::vector<char> in_sub_;
};

/// A subgroup re-exposed as a FinGroup of its own, with index translation.
struct SubgroupView {
  FinGroup group;
  std::vector<unsigned> to_parent;    // subgroup element index -> parent index
  std::vector<int> from_parent;       // parent index -> subgroup index or -1
};
SubgroupView subgroup_view(const Subgroup& h);

/// All subgroups of G, deduplicated, ordered by (order, members).
std::vector<Subgroup> all_subgroups(const FinGroup& g);
/// All cyclic subgroups of G.
std::vector<Subgroup> cyclic_subgroups(const FinGroup& g);

/// Finite G-set with a full action table.
class GSet {
public:
  GSet(const FinGroup& grp, unsigned size, std::vector<unsigned> action_table);
  static GSet from_generator_actions(const FinGroup& grp, unsigned size,
                                     const std::vector<Perm>& generator_images);
  static GSet regular(const FinGroup& grp);  // G acting on itself by left translation
  static GSet on_cosets(const Subgroup& h);  // left cosets gH

  const FinGroup& group() const { return *grp_; }
  unsigned size() const { return size_; }
  unsigned act(unsigned g, unsigned x) const { return table_[g * size_ + x]; }

  struct Orbit {
    std::vector<unsigned> points;
    unsigned base_point;
    Subgroup stabilizer;
  };
  std::vector<Orbit> orbits_and_stabilizers() const;
  Subgroup stabilizer_of(unsigned x) const;

  /// The disjoint union of the orbits indexed by `which`.
  GSet restricted_to_orbits(const std::vector<unsigned>& which,
                            std::vector<unsigned>* point_map = nullptr) const;

  static GSet disjoint_union(const GSet& a, const GSet& b);

private:
  std::shared_ptr<const FinGroup> grp_;
  unsigned size_;
  std::vector<unsigned> table_;
};

}  // namespace tatekit
