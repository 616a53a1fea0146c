#include "maffkit/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maff {

namespace {

constexpr int kJacobiSweepBudget = 100;
constexpr double kJacobiTarget = 1e-12;

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a[p][q]; accumulates into q_acc columns.
void jacobi_rotate(CMatrix& a, CMatrix& q_acc, int p, int q) {
  const complexd g = a.at(p, q);
  const double ag = std::abs(g);
  if (ag == 0.0) return;
  const complexd u = g / ag;  // phase of the pivot
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * ag);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // U = [[c, s], [-conj(u)*s, conj(u)*c]] on the (p, q) plane.
  const complexd uc = std::conj(u);
  const int n = a.rows();
  // rows: A <- U* A
  for (int r = 0; r < n; ++r) {
    const complexd apr = a.at(p, r);
    const complexd aqr = a.at(q, r);
    a.at(p, r) = c * apr - u * s * aqr;
    a.at(q, r) = s * apr + u * c * aqr;
  }
  // columns: A <- A U
  for (int r = 0; r < n; ++r) {
    const complexd arp = a.at(r, p);
    const complexd arq = a.at(r, q);
    a.at(r, p) = c * arp - uc * s * arq;
    a.at(r, q) = s * arp + uc * c * arq;
  }
  for (int r = 0; r < q_acc.rows(); ++r) {
    const complexd qrp = q_acc.at(r, p);
    const complexd qrq = q_acc.at(r, q);
    q_acc.at(r, p) = c * qrp - uc * s * qrq;
    q_acc.at(r, q) = s * qrp + uc * c * qrq;
  }
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
  a.at(p, p) = complexd(a.at(p, p).real(), 0.0);
  a.at(q, q) = complexd(a.at(q, q).real(), 0.0);
}

EigResult eig_unchecked(const CMatrix& h) {
  const int n = h.rows();
  EigResult out;
  out.vectors = CMatrix::identity(n);
  if (n == 0) return out;

  // symmetrize once; the iteration keeps the matrix Hermitian exactly
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));

  const double target = kJacobiTarget * std::max(a.fro_norm(), DBL_MIN);
  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
    const double skip = target / (static_cast<double>(n) * n);
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(a.at(p, q)) > skip) jacobi_rotate(a, out.vectors, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged) fail(errc::no_convergence, "Jacobi sweep budget exhausted");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });
  out.values.resize(n);
  CMatrix sorted(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a.at(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) sorted.at(i, j) = out.vectors.at(i, order[j]);
  }
  out.vectors = std::move(sorted);
  return out;
}

}  // namespace

EigResult hermitian_eig(const CMatrix& h, const Tolerance& tol) {
  if (!h.is_square()) fail(errc::dimension_mismatch, "eigendecomposition of non-square matrix");
  if (!h.all_finite()) fail(errc::bad_input, "non-finite entries");
  const double scale = std::max(1.0, h.fro_norm());
  if (h.hermitian_defect() > tol.eq_abs * scale)
    fail(errc::not_hermitian, "symmetry check failed");
  return eig_unchecked(h);
}

CMatrix psd_sqrt(const CMatrix& p, const Tolerance& tol, double nominal_norm) {
  EigResult eig = hermitian_eig(p, tol);
  const int n = p.rows();
  const double norm = n > 0 ? std::max(std::abs(eig.values.front()), std::abs(eig.values.back()))
                            : 0.0;
  const double slack = n * tol.eq_abs * std::max(1.0, norm);
  const double floor = tol.rank_cutoff(n, std::max(norm, nominal_norm));
  CMatrix root(n, n);
  for (int k = 0; k < n; ++k) {
    double lambda = eig.values[k];
    if (lambda < -slack) fail(errc::not_psd, "negative eigenvalue in psd_sqrt");
    if (lambda <= floor) continue;
    const double s = std::sqrt(lambda);
    const CMatrix v = eig.vectors.col(k);
    root += s * (v * v.adjoint());
  }
  return root;
}

namespace {

// Rank decisions happen on the eigenvalue scale of the Gram matrix: an
// eigenvalue of A A* below rank_scale * eps * dim * lambda_max counts as
// zero. (A sigma-scale cutoff would sit below the sqrt(eps) noise floor the
// Gram route carries for vanishing singular values.)
double gram_cutoff(const std::vector<double>& values, int dim, const Tolerance& tol,
                   double nominal_sigma = 0.0) {
  double lambda_max = nominal_sigma * nominal_sigma;
  for (double v : values) lambda_max = std::max(lambda_max, v);
  return tol.rank_cutoff(dim, lambda_max);
}

// Columns of `vectors` whose Gram eigenvalue clears the cutoff.
CMatrix leading_columns(const EigResult& eig, int dim, const Tolerance& tol,
                        double nominal_sigma, int* rank_out) {
  const int n = static_cast<int>(eig.values.size());
  const double cutoff = gram_cutoff(eig.values, dim, tol, nominal_sigma);
  int rank = 0;
  for (double v : eig.values)
    if (v > cutoff) ++rank;
  if (rank_out) *rank_out = rank;
  CMatrix cols(n, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < n; ++i) cols.at(i, j) = eig.vectors.at(i, n - rank + j);
  return cols;
}

}  // namespace

CMatrix range_projection(const CMatrix& a, const Tolerance& tol, double nominal_sigma) {
  if (!a.all_finite()) fail(errc::bad_input, "non-finite entries");
  const CMatrix gram = a * a.adjoint();
  EigResult eig = eig_unchecked(gram);
  for (auto& v : eig.values) v = std::max(v, 0.0);
  const int dim = std::max(a.rows(), a.cols());
  CMatrix basis = leading_columns(eig, dim, tol, nominal_sigma, nullptr);
  return basis * basis.adjoint();
}

CMatrix null_projection(const CMatrix& a, const Tolerance& tol, double nominal_sigma) {
  return CMatrix::identity(a.cols()) - range_projection(a.adjoint(), tol, nominal_sigma);
}

CMatrix pseudo_inverse(const CMatrix& a, const Tolerance& tol) {
  const CMatrix gram = a.adjoint() * a;  // n x n
  EigResult eig = eig_unchecked(gram);
  const int n = a.cols();
  const double cutoff = gram_cutoff(eig.values, std::max(a.rows(), a.cols()), tol);
  CMatrix pinv(n, a.rows());
  for (int k = 0; k < n; ++k) {
    if (eig.values[k] <= cutoff) continue;
    const double sigma = std::sqrt(eig.values[k]);
    const CMatrix v = eig.vectors.col(k);
    const CMatrix u = (1.0 / sigma) * (a * v);
    pinv += (1.0 / sigma) * (v * u.adjoint());
  }
  return pinv;
}

CMatrix hermitian_pseudo_inverse(const CMatrix& h, const Tolerance& tol) {
  EigResult eig = hermitian_eig(h, tol);
  const int n = h.rows();
  double norm = 0.0;
  for (double v : eig.values) norm = std::max(norm, std::abs(v));
  const double cutoff = tol.rank_cutoff(n, norm);
  CMatrix pinv(n, n);
  for (int k = 0; k < n; ++k) {
    if (std::abs(eig.values[k]) <= cutoff) continue;
    const CMatrix v = eig.vectors.col(k);
    pinv += (1.0 / eig.values[k]) * (v * v.adjoint());
  }
  return pinv;
}

std::vector<double> singular_values(const CMatrix& a, const Tolerance& tol) {
  (void)tol;
  const bool wide = a.rows() > a.cols();
  const CMatrix gram = wide ? a.adjoint() * a : a * a.adjoint();
  EigResult eig = eig_unchecked(gram);
  std::vector<double> sv;
  sv.reserve(eig.values.size());
  for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it)
    sv.push_back(std::sqrt(std::max(*it, 0.0)));
  return sv;
}

int numerical_rank(const CMatrix& a, const Tolerance& tol, double nominal_sigma) {
  const bool wide = a.rows() > a.cols();
  const CMatrix gram = wide ? a.adjoint() * a : a * a.adjoint();
  EigResult eig = eig_unchecked(gram);
  const double cutoff =
      gram_cutoff(eig.values, std::max(a.rows(), a.cols()), tol, nominal_sigma);
  int rank = 0;
  for (double v : eig.values)
    if (v > cutoff) ++rank;
  return rank;
}

double operator_norm(const CMatrix& a) {
  if (a.empty()) return 0.0;
  const bool wide = a.rows() > a.cols();
  const CMatrix gram = wide ? a.adjoint() * a : a * a.adjoint();
  EigResult eig = eig_unchecked(gram);
  return std::sqrt(std::max(eig.values.back(), 0.0));
}

double operator_norm_est(const CMatrix& a) {
  if (a.empty()) return 0.0;
  const int n = a.cols();
  CMatrix v(n, 1);
  for (int i = 0; i < n; ++i) v.at(i, 0) = complexd(1.0, 0.13 * (i + 1));
  double norm_prev = -1.0;
  double est = 0.0;
  const CMatrix ah = a.adjoint();
  for (int iter = 0; iter < 120; ++iter) {
    CMatrix w = a * v;
    est = w.fro_norm();
    if (est == 0.0) return 0.0;
    v = ah * w;
    const double nv = v.fro_norm();
    if (nv == 0.0) return est;
    v = (1.0 / nv) * v;
    if (iter > 4 && std::abs(est - norm_prev) <= 1e-12 * std::max(1.0, est)) break;
    norm_prev = est;
  }
  return est;
}

double min_eigenvalue(const CMatrix& hermitian, const Tolerance& tol) {
  if (hermitian.rows() == 0) return 0.0;
  EigResult eig = hermitian_eig(hermitian, tol);
  return eig.values.front();
}

bool psd_within(const CMatrix& x, double slack, const Tolerance& tol) {
  (void)tol;
  if (!x.is_square()) fail(errc::dimension_mismatch, "psd check");
  if (x.rows() == 0) return true;
  if (x.hermitian_defect() > slack) return false;
  EigResult eig = eig_unchecked(0.5 * (x + x.adjoint()));
  return eig.values.front() >= -slack;
}

CMatrix hermitian_inverse(const CMatrix& h, const Tolerance& tol) {
  EigResult eig = hermitian_eig(h, tol);
  const int n = h.rows();
  double norm = 0.0;
  for (double v : eig.values) norm = std::max(norm, std::abs(v));
  const double cutoff = tol.rank_cutoff(n, norm);
  CMatrix inv(n, n);
  for (int k = 0; k < n; ++k) {
    if (std::abs(eig.values[k]) <= cutoff) fail(errc::not_injective, "singular matrix");
    const CMatrix v = eig.vectors.col(k);
    inv += (1.0 / eig.values[k]) * (v * v.adjoint());
  }
  return inv;
}

CMatrix flush_cancellation(CMatrix x, double factor_scale, const Tolerance& tol) {
  if (factor_scale <= 0.0 || x.empty()) return x;
  const double nrm = operator_norm_est(x);
  const int dim = std::max(std::max(x.rows(), x.cols()), 1);
  if (nrm * nrm > tol.rank_cutoff(dim, factor_scale * factor_scale)) return x;
  return CMatrix(x.rows(), x.cols());
}

bool ranks_clean(const CMatrix& a, const Tolerance& tol) {
  const bool wide = a.rows() > a.cols();
  const CMatrix gram = wide ? a.adjoint() * a : a * a.adjoint();
  EigResult eig = eig_unchecked(gram);
  const double cutoff = gram_cutoff(eig.values, std::max(a.rows(), a.cols()), tol);
  // factor-4 margin on the singular-value scale = factor 16 on eigenvalues
  for (double v : eig.values)
    if (v > cutoff / 16.0 && v < cutoff * 16.0) return false;
  return true;
}

}  // namespace maff
