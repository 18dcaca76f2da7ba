#pragma once

#include <memory>
#include <optional>

#include "tatekit/errors.hpp"
#include "tatekit/int_matrix.hpp"
#include "tatekit/smith.hpp"

namespace tatekit {

/// Finitely generated abelian group presented as Z^ambient_rank / colspan(relations).
/// Normalized eagerly to invariant factors; element arithmetic runs modulo the
/// relation lattice through the stored SNF.
class PresentedAbGroup {
public:
  PresentedAbGroup() : ambient_(0) {}
  PresentedAbGroup(std::size_t ambient_rank, IntMatrix relations)
      : ambient_(ambient_rank), relations_(std::move(relations)) {
    if (relations_.cols() > 0 && relations_.rows() != ambient_) throw Error("relation rows != ambient rank");
    if (relations_.cols() == 0) relations_ = IntMatrix(ambient_, 0);
    normalize();
  }
  static PresentedAbGroup free_group(std::size_t rank) { return PresentedAbGroup(rank, IntMatrix(rank, 0)); }

  std::size_t ambient_rank() const { return ambient_; }
  const IntMatrix& relations() const { return relations_; }
  const IntVec& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  Int order() const {
    Int o = 1;
    for (const Int& d : torsion_) o *= d;
    return free_rank_ == 0 ? o : Int(0);  // 0 marks infinite
  }
  /// Same invariant factors and free rank.
  bool same_normal_form(const PresentedAbGroup& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }

  bool element_is_zero(const IntVec& v) const {
    if (v.size() != ambient_) throw Error("element has wrong ambient rank");
    if (!snf_) return is_zero(v);
    const SmithDecomposition& s = *snf_;
    IntVec c = s.U * v;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (i < s.rank) {
        if (c[i] % s.D(i, i) != 0) return false;
      } else if (c[i] != 0) {
        return false;
      }
    }
    return true;
  }
  bool elements_equal(const IntVec& a, const IntVec& b) const { return element_is_zero(a - b); }

  /// Canonical reduced representative of the class of v.
  IntVec reduce(const IntVec& v) const {
    if (!snf_ || snf_->rank == 0) return v;
    const SmithDecomposition& s = *snf_;
    IntVec c = s.U * v;
    IntVec q(ambient_);
    for (std::size_t i = 0; i < s.rank; ++i) {
      Int r = c[i] % s.D(i, i);
      q[i] = (c[i] - r) / s.D(i, i);
    }
    IntVec shift = relcols_times(q);
    return v - shift;
  }

  /// Coordinates of the class of v in the normal form Z^free + sum Z/d_i
  /// (torsion coordinates first, each reduced into [0, d_i)).
  IntVec normal_coords(const IntVec& v) const;
  /// An ambient representative of the class with the given normal-form
  /// coordinates; inverse to normal_coords up to the relations.
  IntVec from_normal_coords(const IntVec& coords) const;

  const SmithDecomposition& relation_snf() const {
    if (!snf_) throw Error("trivial presentation has no SNF");
    return *snf_;
  }

private:
  void normalize();
  IntVec relcols_times(const IntVec& q) const {
    // relations_ * (Vinv applied...) -- helper for reduce: shift = Uinv * D * q'
    // We instead reconstruct via stored SNF: lattice vector with U-coords d_i*q_i.
    const SmithDecomposition& s = *snf_;
    IntVec w(ambient_);
    for (std::size_t i = 0; i < s.rank; ++i) w[i] = s.D(i, i) * q[i];
    return s.Uinv * w;
  }

  std::size_t ambient_;
  IntMatrix relations_;
  IntVec torsion_;
  std::size_t free_rank_ = 0;
  std::shared_ptr<const SmithDecomposition> snf_;  // of the relation matrix
};

/// Z^rows / colspan(A) in normal form.
PresentedAbGroup cokernel_presentation(const IntMatrix& A);

struct ExactnessVerdict {
  bool maps_descend = true;
  bool composite_zero = false;
  bool exact_at_B = false;
  PresentedAbGroup kernel_mod_image;  // H = ker(g)/im(f) at B
  std::optional<Int> image_index;     // |H| when finite
};

/// Exactness of  A --f--> B --g--> C  at B, for presented groups given by
/// their relation matrices.  Throws IncompatibleMap unless f, g descend.
ExactnessVerdict exactness_check(const IntMatrix& f, const IntMatrix& g, const IntMatrix& rel_A,
                                 const IntMatrix& rel_B, const IntMatrix& rel_C);

/// Kernel and cokernel of a map of presented groups given by an ambient matrix.
PresentedAbGroup map_kernel(const IntMatrix& f, const IntMatrix& rel_src, const IntMatrix& rel_dst);
PresentedAbGroup map_cokernel(const IntMatrix& f, const IntMatrix& rel_dst);
bool presented_map_injective(const IntMatrix& f, const IntMatrix& rel_src, const IntMatrix& rel_dst);
bool presented_map_surjective(const IntMatrix& f, std::size_t dst_ambient, const IntMatrix& rel_dst);
bool presented_map_iso(const IntMatrix& f, const IntMatrix& rel_src, std::size_t dst_ambient,
                       const IntMatrix& rel_dst);
/// Equality of two maps of presented groups (columnwise, modulo rel_dst).
bool presented_maps_equal(const IntMatrix& f, const IntMatrix& g, const PresentedAbGroup& dst);

}  // namespace tatekit
