#include "maffkit/subspace.hpp"

#include <cmath>

namespace maff {

namespace {
constexpr double kIntersectWindow = 1e-7;
}

Subspace from_range(const CMatrix& a, const Tolerance& tol, double nominal_sigma) {
  const CMatrix gram = a * a.adjoint();
  EigResult eig = hermitian_eig(gram, tol);
  const int n = a.rows();
  // rank decision on the Gram eigenvalue scale, as everywhere else
  const double lambda_max =
      std::max(eig.values.empty() ? 0.0 : std::max(eig.values.back(), 0.0),
               nominal_sigma * nominal_sigma);
  const double cutoff = tol.rank_cutoff(std::max(a.rows(), a.cols()), lambda_max);
  int rank = 0;
  for (double v : eig.values)
    if (v > cutoff) ++rank;
  CMatrix basis(n, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = eig.vectors.at(i, n - rank + j);
  return {n, std::move(basis)};
}

Subspace subspace_sum(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.ambient != w.ambient) fail(errc::dimension_mismatch, "subspace sum");
  return from_range(hstack(v.basis, w.basis), tol);
}

Subspace subspace_intersect(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.ambient != w.ambient) fail(errc::dimension_mismatch, "subspace intersection");
  const CMatrix m = v.projection() + w.projection();
  EigResult eig = hermitian_eig(m, tol);
  const int n = v.ambient;
  int count = 0;
  for (double lambda : eig.values)
    if (std::abs(lambda - 2.0) < kIntersectWindow) ++count;
  CMatrix basis(n, count);
  int j = 0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(eig.values[k] - 2.0) >= kIntersectWindow) continue;
    for (int i = 0; i < n; ++i) basis.at(i, j) = eig.vectors.at(i, k);
    ++j;
  }
  return {n, std::move(basis)};
}

Subspace preimage(const CMatrix& a, const Subspace& w, const Tolerance& tol) {
  if (a.rows() != w.ambient) fail(errc::dimension_mismatch, "preimage");
  // (I - P_W) A cancels entirely when ran(A) lies inside W
  const CMatrix blocked = (CMatrix::identity(w.ambient) - w.projection()) * a;
  return from_range(null_projection(blocked, tol, operator_norm_est(a)), tol, 1.0);
}

double subspace_distance(const Subspace& v, const Subspace& w) {
  if (v.ambient != w.ambient) fail(errc::dimension_mismatch, "subspace distance");
  return operator_norm_est(v.projection() - w.projection());
}

bool subspace_contains(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.ambient != w.ambient) fail(errc::dimension_mismatch, "subspace containment");
  const CMatrix residual =
      (CMatrix::identity(w.ambient) - w.projection()) * v.projection();
  return operator_norm_est(residual) < tol.eq_abs;
}

}  // namespace maff
