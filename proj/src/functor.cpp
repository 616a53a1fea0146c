#include "maffkit/functor.hpp"

namespace maff {

Quotient phi_aff(const Homomorphism& phi, const Quotient& t, const Tolerance& tol) {
  const CMatrix a = hom_apply(phi, t.A, tol);
  const CMatrix b = hom_apply(phi, t.B, tol);
  // the nullspace condition transfers along the homomorphism
  return quotient_new(a, b, tol);
}

Subspace phi_aff_s(const Homomorphism& phi, const Subspace& v, const Tolerance& tol) {
  if (v.ambient != phi.source.ambient_dim()) fail(errc::dimension_mismatch, "phi_aff_s");
  const CMatrix proj = v.projection();
  if (!algebra_membership(proj, phi.source, tol))
    fail(errc::not_affiliated, "subspace is not an operator range of the source algebra");
  return from_range(hom_apply(phi, proj, tol), tol);
}

CMatrix phi2_apply(const Homomorphism& phi, const CMatrix& x, const Tolerance& tol) {
  const int n = phi.source.ambient_dim();
  if (x.rows() != 2 * n || x.cols() != 2 * n) fail(errc::dimension_mismatch, "phi2_apply");
  const int m = phi.target.ambient_dim();
  CMatrix out(2 * m, 2 * m);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      out.set_block(bi * m, bj * m, hom_apply(phi, x.block(bi * n, bj * n, n, n), tol));
  return out;
}

bool mvn_check(const Quotient& t, const RepAlgebra& alg, int samples, uint64_t rng_seed,
               const Tolerance& tol) {
  if (t.n != alg.ambient_dim()) fail(errc::dimension_mismatch, "mvn_check");
  const PartialGraph reference = graph_from_quotient(t, tol);
  rng::Engine eng(rng_seed);
  for (int s = 0; s < samples; ++s) {
    const CMatrix u = random_commutant_unitary(alg, eng);
    const CMatrix uh = u.adjoint();
    const PartialGraph conjugated = graph_from_pair(u * t.A * uh, u * t.B * uh, tol);
    if (graph_distance(reference, conjugated) >= tol.eq_abs) return false;
  }
  return true;
}

}  // namespace maff
