#pragma once

#include "maffkit/numkernel.hpp"

namespace maff {

/// Linear subspace of C^n held as an orthonormal column basis (possibly zero
/// columns for the trivial subspace).
struct Subspace {
  int ambient = 0;
  CMatrix basis;  // ambient x dim, orthonormal columns

  int dim() const noexcept { return basis.cols(); }
  CMatrix projection() const { return basis * basis.adjoint(); }

  static Subspace zero(int ambient) { return {ambient, CMatrix(ambient, 0)}; }
  static Subspace full(int ambient) { return {ambient, CMatrix::identity(ambient)}; }
};

/// Orthonormal basis of the column space of A. As in numkernel,
/// nominal_sigma supplies the factor scale when A is morally zero.
Subspace from_range(const CMatrix& a, const Tolerance& tol = {}, double nominal_sigma = 0.0);

Subspace subspace_sum(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

/// V ∩ W via the eigenvalue-2 eigenspace of P_V + P_W (window 1e-7).
Subspace subspace_intersect(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

/// {x : Ax ∈ W}
Subspace preimage(const CMatrix& a, const Subspace& w, const Tolerance& tol = {});

/// ||P_V - P_W||_2
double subspace_distance(const Subspace& v, const Subspace& w);

/// True iff V ⊆ W, certified by ||(I - P_W) P_V||_2 < eq_abs.
bool subspace_contains(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

}  // namespace maff
