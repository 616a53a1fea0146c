#include "maffkit/kreinext.hpp"

#include <cmath>

namespace maff {

namespace {

void require_projection(const CMatrix& e, const Tolerance& tol) {
  if (!e.is_square()) fail(errc::not_projection, "projection must be square");
  if (e.hermitian_defect() > tol.eq_abs * e.rows() ||
      (e * e - e).fro_norm() > tol.eq_abs * e.rows())
    fail(errc::not_projection, "not a Hermitian idempotent");
}

}  // namespace

CMatrix shorted_operator(const CMatrix& a, const CMatrix& e, const Tolerance& tol) {
  if (!a.is_square() || a.rows() != e.rows()) fail(errc::dimension_mismatch, "shorted operator");
  require_projection(e, tol);
  const int n = a.rows();
  const double scale = std::max(1.0, a.fro_norm());
  if (a.hermitian_defect() > tol.eq_abs * scale ||
      min_eigenvalue(0.5 * (a + a.adjoint()), tol) < -n * tol.eq_abs * scale)
    fail(errc::not_psd, "shorted operator needs a PSD argument");
  const CMatrix root = psd_sqrt(0.5 * (a + a.adjoint()), tol);
  const CMatrix blocked = (CMatrix::identity(n) - e) * root;
  const CMatrix mid = null_projection(blocked, tol, operator_norm_est(root));
  CMatrix out = root * mid * root;
  return 0.5 * (out + out.adjoint());
}

SymContraction sym_contraction(CMatrix m, CMatrix e, const Tolerance& tol) {
  if (!m.is_square() || m.rows() != e.rows()) fail(errc::dimension_mismatch, "sym_contraction");
  require_projection(e, tol);
  const double scale = std::max(1.0, operator_norm_est(m));
  if (operator_norm_est(m * e - m) > tol.eq_abs * scale)
    fail(errc::bad_input, "M must be supported on the domain");
  const CMatrix sym_defect = e * (m - m.adjoint()) * e;
  if (operator_norm_est(sym_defect) > tol.eq_abs * scale)
    fail(errc::bad_input, "M is not symmetric on the domain");
  if (operator_norm(m * e) > 1.0 + tol.eq_abs) fail(errc::not_contractive, "||M|| exceeds 1");
  return SymContraction{std::move(m), std::move(e)};
}

bool is_in_F(const SymContraction& b, const Tolerance& tol) {
  // fixed vectors of B inside the domain: E * null(M - E); contractions have
  // nominal scale 1
  const CMatrix z = null_projection(b.M - b.E, tol, 1.0);
  return numerical_rank(b.E * z, tol, 1.0) == 0;
}

SymContraction krein_transform(const Quotient& s, const Tolerance& tol) {
  if (!is_positive(s, tol)) fail(errc::not_positive, "Krein transform needs a positive operator");
  const Quotient k = quotient_new(s.A - s.B, s.A + s.B, tol);
  const CanonicalQuotient c = canonicalize(k, tol);
  return sym_contraction(c.M, c.E, tol);
}

Quotient inverse_krein_transform(const SymContraction& b, const Tolerance& tol) {
  if (!is_in_F(b, tol)) fail(errc::not_in_f, "I - B has nontrivial nullspace on the domain");
  // (I - B)x -> (I + B)x on the domain
  return quotient_new(b.E + b.M, b.E - b.M, tol);
}

ExtensionBounds extension_bounds(const SymContraction& b, const CMatrix& k,
                                 const Tolerance& tol) {
  const int n = b.E.rows();
  if (!k.is_square() || k.rows() != n) fail(errc::dimension_mismatch, "extension_bounds");
  const double scale = std::max(1.0, operator_norm_est(k));
  if (k.hermitian_defect() > tol.eq_abs * scale ||
      operator_norm_est(k * b.E - b.M) > tol.eq_abs * scale)
    fail(errc::not_an_extension, "K does not extend B");
  if (operator_norm(k) > 1.0 + tol.eq_abs) fail(errc::not_contractive, "||K|| exceeds 1");
  const CMatrix id = CMatrix::identity(n);
  if (numerical_rank(id - k, tol, 1.0) < n)
    fail(errc::initial_not_in_f, "null(I - K) is nontrivial");

  ExtensionBounds out;
  out.F = id - b.E;
  out.K_min = k - shorted_operator(id + k, out.F, tol);
  out.K_max = k + shorted_operator(id - k, out.F, tol);
  out.K_min = 0.5 * (out.K_min + out.K_min.adjoint());
  out.K_max = 0.5 * (out.K_max + out.K_max.adjoint());
  out.k_max_valid = numerical_rank(id - out.K_max, tol, 1.0) == n;
  return out;
}

namespace {

// Projection onto the affine set {K Hermitian : K E = M}; the free block
// lives on ran(E)^perp.
CMatrix affine_project(const CMatrix& x, const SymContraction& b) {
  const int n = b.E.rows();
  const CMatrix herm = 0.5 * (x + x.adjoint());
  const CMatrix em = 0.5 * (b.E * b.M + (b.E * b.M).adjoint());
  const CMatrix fixed = b.M + b.M.adjoint() - em;
  const CMatrix off = CMatrix::identity(n) - b.E;
  return fixed + off * herm * off;
}

// Projection onto the operator-norm unit ball (for Hermitian input: clamp
// the spectrum to [-1, 1]).
CMatrix ball_project(const CMatrix& x, const Tolerance& tol) {
  EigResult eig = hermitian_eig(0.5 * (x + x.adjoint()), tol);
  const int n = x.rows();
  CMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double lambda = std::min(1.0, std::max(-1.0, eig.values[k]));
    if (lambda == 0.0) continue;
    const CMatrix v = eig.vectors.col(k);
    out += lambda * (v * v.adjoint());
  }
  return out;
}

double extension_residual(const CMatrix& k, const SymContraction& b) {
  const double off_domain = operator_norm_est(k * b.E - b.M);
  const double over_norm = std::max(0.0, operator_norm(k) - 1.0);
  return std::max(off_domain, over_norm);
}

}  // namespace

CMatrix find_initial_extension(const SymContraction& b, const Tolerance& tol, int max_iter) {
  const int n = b.E.rows();
  const double scale = std::max(1.0, operator_norm_est(b.M));
  CMatrix k = affine_project(CMatrix(n, n), b);
  double residual = extension_residual(k, b);
  double prev = residual;
  int stalled = 0;
  for (int iter = 0; iter < max_iter && residual > 1e-10 * scale; ++iter) {
    k = affine_project(ball_project(k, tol), b);
    residual = extension_residual(k, b);
    if (prev - residual < 1e-15 * scale) {
      if (++stalled > 50) break;
    } else {
      stalled = 0;
    }
    prev = residual;
  }
  if (residual > 1e-10 * scale)
    fail(errc::no_extension_found,
         "alternating projections stalled; possibly no contractive extension exists");
  k = 0.5 * (k + k.adjoint());

  // retreat toward K_min while I - K stays singular
  const CMatrix id = CMatrix::identity(n);
  const CMatrix f = id - b.E;
  for (int attempt = 0; attempt < 3 && numerical_rank(id - k, tol, 1.0) < n; ++attempt) {
    const double delta = attempt == 2 ? 1.0 : 0.5;
    k = k - delta * shorted_operator(id + k, f, tol);
    k = 0.5 * (k + k.adjoint());
  }
  if (numerical_rank(id - k, tol, 1.0) < n)
    fail(errc::no_extension_found,
         "every contractive extension has I - K singular; no extension in F(H)");
  return k;
}

PositiveExtensions positive_extensions(const Quotient& s, const std::optional<CMatrix>& witness,
                                       const Tolerance& tol) {
  if (!is_positive(s, tol)) fail(errc::not_positive, "positive_extensions");
  const SymContraction b = krein_transform(s, tol);
  const int n = s.n;
  const CMatrix id = CMatrix::identity(n);

  CMatrix k;
  if (witness) {
    const CMatrix& w = *witness;
    if (!w.is_square() || w.rows() != n) fail(errc::dimension_mismatch, "witness");
    const double scale = std::max(1.0, w.fro_norm());
    if (w.hermitian_defect() > tol.eq_abs * scale ||
        min_eigenvalue(0.5 * (w + w.adjoint()), tol) < -n * tol.eq_abs * scale)
      fail(errc::not_psd, "witness must be PSD");
    const CanonicalQuotient cs = canonicalize(s, tol);
    if (operator_norm_est(w * cs.E - cs.M) > tol.eq_threshold(operator_norm_est(w)))
      fail(errc::not_an_extension, "witness does not restrict to S");
    k = id - 2.0 * hermitian_inverse(0.5 * (w + w.adjoint()) + id, tol);
    k = 0.5 * (k + k.adjoint());
  } else {
    k = find_initial_extension(b, tol);
  }

  PositiveExtensions out;
  out.bounds = extension_bounds(b, k, tol);
  const CMatrix vn = 2.0 * hermitian_inverse(id - out.bounds.K_min, tol) - id;
  out.krein_vn = total_quotient(0.5 * (vn + vn.adjoint()));
  if (out.bounds.k_max_valid) {
    const CMatrix fr = 2.0 * hermitian_inverse(id - out.bounds.K_max, tol) - id;
    out.friedrichs = total_quotient(0.5 * (fr + fr.adjoint()));
  }
  return out;
}

CMatrix sample_extension(const ExtensionBounds& bounds, double t) {
  if (t < 0.0 || t >= 1.0) fail(errc::bad_input, "t must lie in [0, 1)");
  return (1.0 - t) * bounds.K_min + t * bounds.K_max;
}

}  // namespace maff
