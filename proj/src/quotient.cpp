#include "maffkit/quotient.hpp"

#include <cmath>

namespace maff {

Quotient quotient_new(CMatrix a, CMatrix b, const Tolerance& tol) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    fail(errc::dimension_mismatch, "quotient operands must be square of equal size");
  if (!a.all_finite() || !b.all_finite()) fail(errc::bad_input, "non-finite entries");
  const CMatrix violation = a * null_projection(b, tol);
  if (operator_norm_est(violation) >= tol.eq_threshold(operator_norm_est(a)))
    fail(errc::nullspace_violation, "null(B) not contained in null(A)");
  const int n = a.rows();
  return Quotient{std::move(a), std::move(b), n};
}

Quotient trivial_quotient(int n) { return Quotient{CMatrix(n, n), CMatrix(n, n), n}; }

Quotient total_quotient(CMatrix a) {
  const int n = a.rows();
  if (!a.is_square()) fail(errc::dimension_mismatch, "total quotient of non-square matrix");
  return Quotient{std::move(a), CMatrix::identity(n), n};
}

CanonicalQuotient canonicalize(const Quotient& t, const Tolerance& tol) {
  CanonicalQuotient out;
  out.E = range_projection(t.B, tol);
  out.M = t.A * pseudo_inverse(t.B, tol);
  return out;
}

CMatrix dom_projection(const Quotient& t, const Tolerance& tol) {
  return range_projection(t.B, tol);
}

CMatrix quotient_apply(const Quotient& t, const CMatrix& x, const Tolerance& tol) {
  if (x.rows() != t.n || x.cols() != 1) fail(errc::dimension_mismatch, "quotient_apply vector");
  const CanonicalQuotient c = canonicalize(t, tol);
  const CMatrix off = x - c.E * x;
  if (off.fro_norm() > 1e-8 * x.fro_norm()) fail(errc::outside_domain, "x not in dom(T)");
  return c.M * x;
}

Quotient quotient_sum(const Quotient& t1, const Quotient& t2, const Tolerance& tol) {
  if (t1.n != t2.n) fail(errc::dimension_mismatch, "quotient sum");
  const CMatrix b = box_dot(t1.B, t2.B, tol);
  const CMatrix a = quotient_right_mul(t1, b, tol) + quotient_right_mul(t2, b, tol);
  return quotient_new(a, b, tol);
}

Quotient quotient_product(const Quotient& t1, const Quotient& t2, const Tolerance& tol) {
  if (t1.n != t2.n) fail(errc::dimension_mismatch, "quotient product");
  const CMatrix g = inv_circ(t2.A, t1.B, tol);
  const double g_scale = std::max(1.0, operator_norm_est(g));
  const CMatrix b =
      flush_cancellation(t2.B * g, operator_norm_est(t2.B) * g_scale, tol);
  const CMatrix ag =
      flush_cancellation(t2.A * g, operator_norm_est(t2.A) * g_scale, tol);
  const CMatrix a = quotient_right_mul(t1, ag, tol);
  return quotient_new(a, b, tol);
}

CMatrix quotient_right_mul(const Quotient& t, const CMatrix& c, const Tolerance& tol) {
  if (c.rows() != t.n) fail(errc::dimension_mismatch, "quotient_right_mul");
  if (!range_contained(c, t.B, tol))
    fail(errc::range_not_contained, "col(C) not within dom(T)");
  const CMatrix x = douglas_solve(c, t.B, tol);
  return flush_cancellation(
      t.A * x, operator_norm_est(t.A) * std::max(1.0, operator_norm_est(x)), tol);
}

KaufmanResult quotient_kaufman(const Quotient& t, const Tolerance& tol) {
  KaufmanResult out;
  // B N(A) cancels when null(A) is inside null(B)
  out.null_proj =
      range_projection(t.B * null_projection(t.A, tol), tol, operator_norm_est(t.B));
  const CMatrix num = (CMatrix::identity(t.n) - out.null_proj) * t.B;
  out.dagger = quotient_new(num, t.A, tol);
  return out;
}

Quotient quotient_adjoint(const Quotient& t, const Tolerance& tol) {
  // (A/B)* = (B*)^dagger A*
  const KaufmanResult bstar_dagger = quotient_kaufman(total_quotient(t.B.adjoint()), tol);
  return quotient_product(bstar_dagger.dagger, total_quotient(t.A.adjoint()), tol);
}

bool quotient_equals(const Quotient& t1, const Quotient& t2, const Tolerance& tol) {
  if (t1.n != t2.n) fail(errc::dimension_mismatch, "quotient equality");
  const CanonicalQuotient c1 = canonicalize(t1, tol);
  const CanonicalQuotient c2 = canonicalize(t2, tol);
  const double scale =
      std::max(operator_norm_est(c1.M), operator_norm_est(c2.M));
  const bool canonical_close =
      operator_norm_est(c1.M - c2.M) < tol.eq_threshold(scale) &&
      operator_norm_est(c1.E - c2.E) < tol.eq_abs;
  if (!canonical_close) return false;
  // cross-check through the graph subspaces
  const CMatrix s1 = vstack(t1.B, t1.A);
  const CMatrix s2 = vstack(t2.B, t2.A);
  return subspace_distance(from_range(s1, tol), from_range(s2, tol)) < tol.eq_abs;
}

bool quotient_extends(const Quotient& t1, const Quotient& t2, const Tolerance& tol) {
  if (t1.n != t2.n) fail(errc::dimension_mismatch, "quotient extension");
  return range_contained(vstack(t1.B, t1.A), vstack(t2.B, t2.A), tol);
}

std::optional<CMatrix> extension_witness(const Quotient& t1, const Quotient& t2,
                                         const Tolerance& tol) {
  if (!quotient_extends(t1, t2, tol)) return std::nullopt;
  return douglas_solve(vstack(t1.B, t1.A), vstack(t2.B, t2.A), tol);
}

CMatrix characteristic_projection(const Quotient& t, const Tolerance& tol) {
  CMatrix s(2 * t.n, 2 * t.n);
  s.set_block(0, 0, t.B);
  s.set_block(t.n, 0, t.A);
  return range_projection(s, tol);
}

ClosedDecomposition closed_decomposition(const Quotient& t, const Tolerance& tol,
                                         const std::optional<CMatrix>& p_seed) {
  ClosedDecomposition out;
  const CanonicalQuotient c = canonicalize(t, tol);
  out.P = p_seed.value_or(CMatrix::identity(t.n));
  if (!out.P.is_square() || out.P.rows() != t.n)
    fail(errc::dimension_mismatch, "decomposition seed");
  if (min_eigenvalue(0.5 * (out.P + out.P.adjoint()), tol) <= 0.0)
    fail(errc::not_psd, "decomposition seed must be positive definite");
  out.E = c.E;
  out.A = out.P * c.M;
  return out;
}

Quotient quotient_inverse(const Quotient& t, const Tolerance& tol) {
  const CMatrix na = null_projection(t.A, tol);
  const CMatrix nb = null_projection(t.B, tol);
  if (operator_norm_est(na - nb) >= tol.eq_abs)
    fail(errc::not_injective, "null(A) != null(B)");
  return quotient_new(t.B, t.A, tol);
}

Quotient affine_map(const Quotient& t, double theta, complexd alpha) {
  const complexd phase = std::polar(1.0, theta);
  return Quotient{phase * (t.A + alpha * t.B), t.B, t.n};
}

}  // namespace maff
