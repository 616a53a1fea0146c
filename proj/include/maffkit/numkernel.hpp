#pragma once

#include <vector>

#include "maffkit/cmatrix.hpp"
#include "maffkit/tolerance.hpp"

namespace maff {

struct EigResult {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // unitary, H = vectors * diag(values) * vectors^*
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Converges to
/// off-diagonal Frobenius norm below 1e-12 * ||H||_F within a budget of 100
/// sweeps; throws NoConvergence past the budget, NotHermitian when the
/// symmetry check fails.
EigResult hermitian_eig(const CMatrix& h, const Tolerance& tol = {});

// Rank decisions compare against the matrix's own spectral scale. When a
// matrix is the residue of a cancellation (morally zero up to rounding), the
// caller must supply the nominal scale of the factors through
// `nominal_sigma` / `nominal_norm`, or the noise would read as rank.

/// Hermitian PSD square root. Eigenvalues in [-n*eq_abs*max(1,||P||), 0) are
/// clamped to zero; anything lower is NotPsd. Eigenvalues under the rank
/// cutoff of max(||P||, nominal_norm) are flushed to zero.
CMatrix psd_sqrt(const CMatrix& p, const Tolerance& tol = {}, double nominal_norm = 0.0);

/// Orthogonal projection onto the column space of A.
CMatrix range_projection(const CMatrix& a, const Tolerance& tol = {},
                         double nominal_sigma = 0.0);

/// Orthogonal projection onto the null space of A; identically
/// I - range_projection(A*).
CMatrix null_projection(const CMatrix& a, const Tolerance& tol = {},
                        double nominal_sigma = 0.0);

CMatrix pseudo_inverse(const CMatrix& a, const Tolerance& tol = {});

/// Pseudo-inverse of a Hermitian matrix through its own eigendecomposition;
/// tighter than the Gram route when the spectrum carries genuinely small
/// eigenvalues.
CMatrix hermitian_pseudo_inverse(const CMatrix& h, const Tolerance& tol = {});

int numerical_rank(const CMatrix& a, const Tolerance& tol = {}, double nominal_sigma = 0.0);

/// Descending singular values.
std::vector<double> singular_values(const CMatrix& a, const Tolerance& tol = {});

/// Spectral norm via eigendecomposition of A*A.
double operator_norm(const CMatrix& a);

/// Spectral norm estimate by power iteration on A*A; cheap, converges from
/// below. Used in hot comparison paths where the measured value is far from
/// the threshold on either side.
double operator_norm_est(const CMatrix& a);

double min_eigenvalue(const CMatrix& hermitian, const Tolerance& tol = {});

/// Hermitian within `slack` (Frobenius defect) and min eigenvalue >= -slack.
bool psd_within(const CMatrix& x, double slack, const Tolerance& tol = {});

/// Inverse of a Hermitian matrix with no eigenvalue below the rank cutoff.
CMatrix hermitian_inverse(const CMatrix& h, const Tolerance& tol = {});

/// True when every singular value is either zero-like or safely above the
/// rank cutoff (factor-4 margin); test generators resample until this holds.
bool ranks_clean(const CMatrix& a, const Tolerance& tol = {});

/// A matrix whose every singular value sits at the rounding floor of its
/// factor scale is an exact cancellation; flush it to a true zero so
/// downstream rank decisions are not fooled.
CMatrix flush_cancellation(CMatrix x, double factor_scale, const Tolerance& tol = {});

}  // namespace maff
