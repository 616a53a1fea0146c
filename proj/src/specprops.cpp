#include "maffkit/specprops.hpp"

#include <cmath>

#include "maffkit/rng.hpp"

namespace maff {

namespace {

double cert_slack(const CMatrix& cert) {
  return psd_slack(cert.rows(), operator_norm_est(cert));
}

}  // namespace

bool in_half_plane(const Quotient& t, const HalfPlane& h, const Tolerance& tol) {
  (void)tol;
  // pull back by the inverse affine map, then test the x >= 0 half-plane
  const double theta_p = -h.theta;
  const complexd alpha_p = -std::polar(1.0, h.theta) * h.alpha;
  const Quotient pulled = affine_map(t, theta_p, alpha_p);
  const CMatrix cert = pulled.B.adjoint() * pulled.A + pulled.A.adjoint() * pulled.B;
  return psd_within(cert, cert_slack(cert));
}

bool is_symmetric(const Quotient& t, const Tolerance& tol) {
  (void)tol;
  const CMatrix cert = t.B.adjoint() * t.A;
  return (cert - cert.adjoint()).fro_norm() <= cert_slack(cert) * t.n;
}

bool is_positive(const Quotient& t, const Tolerance& tol) {
  (void)tol;
  const CMatrix cert = t.B.adjoint() * t.A;
  const double slack = cert_slack(cert) * t.n;
  if ((cert - cert.adjoint()).fro_norm() > slack) return false;
  return psd_within(0.5 * (cert + cert.adjoint()), slack);
}

bool is_accretive(const Quotient& t, const Tolerance& tol) {
  return in_half_plane(t, HalfPlane{0.0, complexd(0.0, 0.0)}, tol);
}

std::pair<HalfPlane, HalfPlane> sector_half_planes(const Sector& s) {
  // Supporting half-planes along the boundary rays at arguments +/- theta
  // from the vertex: {w : Re(e^{-i phi}(w - c)) >= 0} = H_{phi, e^{-i phi} c}
  // with phi = theta - pi/2 (upper ray) and pi/2 - theta (lower ray).
  const double upper = s.theta - M_PI / 2.0;
  const double lower = M_PI / 2.0 - s.theta;
  const HalfPlane h1{upper, std::polar(1.0, -upper) * s.c};
  const HalfPlane h2{lower, std::polar(1.0, -lower) * s.c};
  return {h1, h2};
}

bool is_sectorial(const Quotient& t, const Sector& s, const Tolerance& tol) {
  if (s.theta < 0.0 || s.theta >= M_PI / 2.0) fail(errc::bad_input, "sector half-angle range");
  const auto [h1, h2] = sector_half_planes(s);
  return in_half_plane(t, h1, tol) && in_half_plane(t, h2, tol);
}

bool is_self_adjoint(const Quotient& t, const Tolerance& tol) {
  return quotient_equals(t, quotient_adjoint(t, tol), tol);
}

bool is_normal(const Quotient& t, const Tolerance& tol) {
  const Quotient adj = quotient_adjoint(t, tol);
  return quotient_equals(quotient_product(adj, t, tol), quotient_product(t, adj, tol), tol);
}

std::vector<complexd> numerical_range_sample(const Quotient& t, int count, uint64_t rng_seed,
                                             const Tolerance& tol) {
  const CanonicalQuotient c = canonicalize(t, tol);
  std::vector<complexd> out;
  if (numerical_rank(c.E, tol) == 0) return out;
  rng::Engine eng(rng_seed);
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    CMatrix y = c.E * rng::gaussian_matrix(t.n, 1, eng);
    const double norm = y.fro_norm();
    if (norm < 1e-10) continue;
    y = (1.0 / norm) * y;
    const CMatrix image = c.M * y;
    complexd value(0.0, 0.0);
    for (int i = 0; i < t.n; ++i) value += std::conj(y.at(i, 0)) * image.at(i, 0);
    out.push_back(value);
  }
  return out;
}

bool half_plane_contains(const HalfPlane& h, complexd z, double slack) {
  const complexd pulled = std::polar(1.0, -h.theta) * z - h.alpha;
  return pulled.real() >= -slack;
}

bool sector_contains(const Sector& s, complexd z, double slack) {
  const auto [h1, h2] = sector_half_planes(s);
  return half_plane_contains(h1, z, slack) && half_plane_contains(h2, z, slack);
}

}  // namespace maff
