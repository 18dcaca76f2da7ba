#pragma once

#include <optional>

#include "tatekit/int_matrix.hpp"

namespace tatekit {

/// U*A*V = D with U, V unimodular and D diagonal with d1 | d2 | ... , di >= 0.
struct SmithDecomposition {
  IntMatrix U, D, V;
  IntMatrix Uinv, Vinv;  // tracked alongside; A = Uinv*D*Vinv
  std::size_t rank = 0;  // number of nonzero diagonal entries
  IntVec diagonal() const {
    std::size_t n = std::min(D.rows(), D.cols());
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
    return d;
  }
};

struct SnfOptions {
  bool with_u = true;
  bool with_uinv = true;
  bool with_v = true;
  bool with_vinv = true;
};
SmithDecomposition smith_normal_form(const IntMatrix& A);
SmithDecomposition smith_normal_form(const IntMatrix& A, const SnfOptions& opts);

/// Columns form a basis of { x : A*x = 0 }.
IntMatrix kernel_lattice(const IntMatrix& A);

/// A basis (as columns) of the lattice spanned by the columns of A.
IntMatrix column_space_basis(const IntMatrix& A);

/// One solution x of A*x = b, if any.
std::optional<IntVec> solve(const IntMatrix& A, const IntVec& b);

/// Factor once, solve many times.  Also answers membership in the column span.
class SnfSolver {
public:
  explicit SnfSolver(const IntMatrix& A) : snf_(smith_normal_form(A)), cols_(A.cols()) {}
  std::optional<IntVec> solve(const IntVec& b) const;
  bool contains(const IntVec& b) const { return solve(b).has_value(); }
  const SmithDecomposition& snf() const { return snf_; }

private:
  SmithDecomposition snf_;
  std::size_t cols_;
};

/// Basis of { x : M*x lies in the column span of L }.  The result always
/// contains ker(M); pass L with zero columns removed for speed.
IntMatrix preimage_lattice(const IntMatrix& M, const IntMatrix& L);

}  // namespace tatekit
