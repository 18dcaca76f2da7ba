#include "tatekit/presented_group.hpp"

namespace tatekit {

void PresentedAbGroup::normalize() {
  if (ambient_ == 0) {
    free_rank_ = 0;
    return;
  }
  if (relations_.cols() == 0) {
    free_rank_ = ambient_;
    return;
  }
  auto s = std::make_shared<SmithDecomposition>(smith_normal_form(relations_));
  torsion_.clear();
  for (std::size_t i = 0; i < s->rank; ++i)
    if (s->D(i, i) > 1) torsion_.push_back(s->D(i, i));
  free_rank_ = ambient_ - s->rank;
  snf_ = std::move(s);
}

IntVec PresentedAbGroup::normal_coords(const IntVec& v) const {
  if (v.size() != ambient_) throw Error("element has wrong ambient rank");
  if (!snf_) return v;  // free: ambient coordinates are the normal coordinates
  const SmithDecomposition& s = *snf_;
  IntVec c = s.U * v;
  IntVec out;
  out.reserve(torsion_.size() + free_rank_);
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.D(i, i) > 1) {
      Int r = c[i] % s.D(i, i);
      if (r < 0) r += s.D(i, i);
      out.push_back(r);
    }
  }
  for (std::size_t i = s.rank; i < ambient_; ++i) out.push_back(c[i]);
  return out;
}

IntVec PresentedAbGroup::from_normal_coords(const IntVec& coords) const {
  if (coords.size() != torsion_.size() + free_rank_) throw Error("wrong number of coordinates");
  if (!snf_) return coords;
  const SmithDecomposition& s = *snf_;
  IntVec u(ambient_);
  std::size_t at = 0;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) u[i] = coords[at++];
  for (std::size_t i = s.rank; i < ambient_; ++i) u[i] = coords[at++];
  return s.Uinv * u;
}

PresentedAbGroup cokernel_presentation(const IntMatrix& A) {
  return PresentedAbGroup(A.rows(), A);
}

ExactnessVerdict exactness_check(const IntMatrix& f, const IntMatrix& g, const IntMatrix& rel_A,
                                 const IntMatrix& rel_B, const IntMatrix& rel_C) {
  ExactnessVerdict out;
  // f : Z^a -> Z^b must send rel_A into the lattice of rel_B; likewise g.
  SnfSolver relB_solver(rel_B.cols() ? rel_B : IntMatrix(f.rows(), 0));
  for (std::size_t j = 0; j < rel_A.cols(); ++j) {
    IntVec img = f * rel_A.column(j);
    if (rel_B.cols() == 0 ? !is_zero(img) : !relB_solver.contains(img))
      throw IncompatibleMap("f does not descend to the presented quotients");
  }
  SnfSolver relC_solver(rel_C.cols() ? rel_C : IntMatrix(g.rows(), 0));
  for (std::size_t j = 0; j < rel_B.cols(); ++j) {
    IntVec img = g * rel_B.column(j);
    if (rel_C.cols() == 0 ? !is_zero(img) : !relC_solver.contains(img))
      throw IncompatibleMap("g does not descend to the presented quotients");
  }

  // composite g*f must vanish in C for ker/im to make sense
  out.composite_zero = true;
  IntMatrix gf = g * f;
  for (std::size_t j = 0; j < gf.cols() && out.composite_zero; ++j)
    if (rel_C.cols() == 0 ? !is_zero(gf.column(j)) : !relC_solver.contains(gf.column(j)))
      out.composite_zero = false;

  if (!out.composite_zero) {
    out.exact_at_B = false;
    return out;
  }

  // K = { x in Z^b : g(x) in rel_C-lattice }, then H = K / (im f + rel_B).
  IntMatrix K = preimage_lattice(g, rel_C);
  IntMatrix sub = IntMatrix::hcat(f, rel_B);
  // coordinates of sub's columns in the basis K
  SnfSolver ksolve(K);
  IntMatrix rel_in_K(K.cols(), sub.cols());
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    auto c = ksolve.solve(sub.column(j));
    if (!c) throw Error("internal: image not inside kernel lattice");
    rel_in_K.set_column(j, *c);
  }
  out.kernel_mod_image = PresentedAbGroup(K.cols(), rel_in_K);
  out.exact_at_B = out.kernel_mod_image.is_trivial();
  if (out.kernel_mod_image.is_finite()) out.image_index = out.kernel_mod_image.order();
  return out;
}

PresentedAbGroup map_kernel(const IntMatrix& f, const IntMatrix& rel_src, const IntMatrix& rel_dst) {
  IntMatrix pre = preimage_lattice(f, rel_dst);
  SnfSolver solver(pre);
  IntMatrix rel_in(pre.cols(), rel_src.cols());
  for (std::size_t j = 0; j < rel_src.cols(); ++j) {
    auto c = solver.solve(rel_src.column(j));
    if (!c) throw Error("internal: source relations not in kernel preimage");
    rel_in.set_column(j, *c);
  }
  return PresentedAbGroup(pre.cols(), rel_in);
}

PresentedAbGroup map_cokernel(const IntMatrix& f, const IntMatrix& rel_dst) {
  return PresentedAbGroup(f.rows(), IntMatrix::hcat(f, rel_dst));
}

bool presented_map_injective(const IntMatrix& f, const IntMatrix& rel_src, const IntMatrix& rel_dst) {
  return map_kernel(f, rel_src, rel_dst).is_trivial();
}

bool presented_map_surjective(const IntMatrix& f, std::size_t dst_ambient, const IntMatrix& rel_dst) {
  (void)dst_ambient;
  return map_cokernel(f, rel_dst).is_trivial();
}

bool presented_map_iso(const IntMatrix& f, const IntMatrix& rel_src, std::size_t dst_ambient,
                       const IntMatrix& rel_dst) {
  return presented_map_injective(f, rel_src, rel_dst) &&
         presented_map_surjective(f, dst_ambient, rel_dst);
}

bool presented_maps_equal(const IntMatrix& f, const IntMatrix& g, const PresentedAbGroup& dst) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (!dst.element_is_zero(f.column(j) - g.column(j))) return false;
  return true;
}

}  // namespace tatekit
