#include "tatekit/smith.hpp"

#include <algorithm>
#include <cassert>

namespace tatekit {

namespace {

// In-place elementary operations on A, mirrored into the requested
// transforms.  Row ops act on U (and inversely on Uinv), column ops on V
// (and Vinv).  Entries of A left of `floor` are already zero for the rows
// still in play, so row/column updates skip them.
struct Eliminator {
  IntMatrix& A;
  IntMatrix& U;
  IntMatrix& Uinv;
  IntMatrix& V;
  IntMatrix& Vinv;
  std::size_t floor = 0;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = floor; k < A.cols(); ++k) std::swap(A(i, k), A(j, k));
    for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U(i, k), U(j, k));
    for (std::size_t k = 0; k < Uinv.rows(); ++k) std::swap(Uinv(k, i), Uinv(k, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = floor; k < A.rows(); ++k) std::swap(A(k, i), A(k, j));
    for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V(k, i), V(k, j));
    for (std::size_t k = 0; k < Vinv.cols(); ++k) std::swap(Vinv(i, k), Vinv(j, k));
  }
  // row i += c * row j
  void add_row(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = floor; k < A.cols(); ++k)
      if (A(j, k) != 0) A(i, k) += c * A(j, k);
    for (std::size_t k = 0; k < U.cols(); ++k)
      if (U(j, k) != 0) U(i, k) += c * U(j, k);
    for (std::size_t k = 0; k < Uinv.rows(); ++k)
      if (Uinv(k, i) != 0) Uinv(k, j) -= c * Uinv(k, i);
  }
  // col i += c * col j
  void add_col(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = floor; k < A.rows(); ++k)
      if (A(k, j) != 0) A(k, i) += c * A(k, j);
    for (std::size_t k = 0; k < V.rows(); ++k)
      if (V(k, j) != 0) V(k, i) += c * V(k, j);
    for (std::size_t k = 0; k < Vinv.cols(); ++k)
      if (Vinv(i, k) != 0) Vinv(j, k) -= c * Vinv(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = floor; k < A.cols(); ++k) A(i, k) = -A(i, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) = -U(i, k);
    for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv(k, i) = -Uinv(k, i);
  }
};

}  // namespace

namespace {

// quotient with |a - q b| <= |b| / 2, to limit entry growth
Int rounded_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0) {
    Int twice = 2 * abs(r);
    if (twice > abs(b) || (twice == abs(b) && ((r > 0) == (b > 0)))) q += ((r > 0) == (b > 0)) ? 1 : -1;
  }
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  return smith_normal_form(A, SnfOptions{});
}

SmithDecomposition smith_normal_form(const IntMatrix& A, const SnfOptions& opts) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithDecomposition out;
  out.D = A;
  if (opts.with_u) out.U = IntMatrix::identity(m);
  if (opts.with_uinv) out.Uinv = IntMatrix::identity(m);
  if (opts.with_v) out.V = IntMatrix::identity(n);
  if (opts.with_vinv) out.Vinv = IntMatrix::identity(n);
  Eliminator e{out.D, out.U, out.Uinv, out.V, out.Vinv};
  IntMatrix& D = out.D;

  const std::size_t nmin = std::min(m, n);
  std::size_t k = 0;
  while (k < nmin) {
    e.floor = k;
    for (;;) {
      // bring the nonzero entry of least absolute value to (k, k)
      std::size_t pi = k, pj = k;
      bool found = false;
      Int best = 0;
      for (std::size_t i = k; i < m && best != 1; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (D(i, j) == 0) continue;
          Int a = abs(D(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (!found) goto done;  // submatrix is zero
      e.swap_rows(k, pi);
      e.swap_cols(k, pj);

      // one reduction pass against the current pivot; leftovers trigger a
      // fresh pivot selection, so entries cannot build up across passes
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (D(i, k) == 0) continue;
        e.add_row(i, k, -rounded_quotient(D(i, k), D(k, k)));
        if (D(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (D(k, j) == 0) continue;
        e.add_col(j, k, -rounded_quotient(D(k, j), D(k, k)));
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: D(k,k) must divide every later entry
      bool redo = false;
      for (std::size_t i = k + 1; i < m && !redo; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (D(i, j) % D(k, k) != 0) {
            e.add_row(k, i, 1);
            redo = true;
            break;
          }
      if (!redo) break;
    }

    if (D(k, k) < 0) e.negate_row(k);
    ++k;
  }
done:
  out.rank = k;
  return out;
}

IntMatrix kernel_lattice(const IntMatrix& A) {
  if (A.cols() == 0) return IntMatrix(0, 0);
  if (A.rows() == 0) return IntMatrix::identity(A.cols());
  SmithDecomposition s = smith_normal_form(A, SnfOptions{false, false, true, false});
  // A*x = 0  <=>  D*(Vinv*x) = 0  <=>  y_i = 0 for i < rank; x = V*y.
  std::size_t free = A.cols() - s.rank;
  IntMatrix K(A.cols(), free);
  for (std::size_t j = 0; j < free; ++j)
    for (std::size_t i = 0; i < A.cols(); ++i) K(i, j) = s.V(i, s.rank + j);
  return K;
}

IntMatrix column_space_basis(const IntMatrix& A) {
  if (A.cols() == 0 || A.rows() == 0 || A.is_zero()) return IntMatrix(A.rows(), 0);
  SmithDecomposition s = smith_normal_form(A, SnfOptions{false, true, false, false});
  // col span of A = col span of Uinv*D = { Uinv * (d_i e_i) }.
  IntMatrix B(A.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j) {
    const Int& d = s.D(j, j);
    for (std::size_t i = 0; i < A.rows(); ++i) B(i, j) = d * s.Uinv(i, j);
  }
  return B;
}

std::optional<IntVec> SnfSolver::solve(const IntVec& b) const {
  const SmithDecomposition& s = snf_;
  IntVec c = s.U * b;
  IntVec y(cols_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::optional<IntVec> solve(const IntMatrix& A, const IntVec& b) {
  return SnfSolver(A).solve(b);
}

IntMatrix preimage_lattice(const IntMatrix& M, const IntMatrix& L) {
  if (L.cols() == 0) return kernel_lattice(M);
  IntMatrix big = IntMatrix::hcat(M, -L);
  IntMatrix K = kernel_lattice(big);
  IntMatrix proj(M.cols(), K.cols());
  for (std::size_t i = 0; i < M.cols(); ++i)
    for (std::size_t j = 0; j < K.cols(); ++j) proj(i, j) = K(i, j);
  return column_space_basis(proj);
}

}  // namespace tatekit
