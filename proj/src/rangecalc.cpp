#include "maffkit/rangecalc.hpp"

namespace maff {

bool range_contained(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "range containment");
  const CMatrix residual = (CMatrix::identity(b.rows()) - range_projection(b, tol)) * a;
  return operator_norm_est(residual) < tol.eq_threshold(operator_norm_est(a));
}

CMatrix douglas_solve(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (!range_contained(a, b, tol)) fail(errc::range_not_contained, "col(A) not within col(B)");
  // X := R(B*) B^+ A; the projection pins the range condition that selects
  // the unique solution.
  const CMatrix x = pseudo_inverse(b, tol) * a;
  return range_projection(b.adjoint(), tol) * x;
}

CMatrix box_plus(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "box_plus");
  return psd_sqrt(a * a.adjoint() + b * b.adjoint(), tol);
}

namespace {

// N(T_{A,B})_{11} for T_{A,B} = [[A, -B], [0, 0]].
CMatrix null_block_11(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  const int n = a.rows();
  CMatrix t(2 * n, 2 * n);
  t.set_block(0, 0, a);
  t.set_block(0, n, -b);
  const CMatrix null_proj = null_projection(t, tol);
  return null_proj.block(0, 0, n, n);
}

}  // namespace

CMatrix box_dot(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || !a.is_square() || !b.is_square())
    fail(errc::dimension_mismatch, "box_dot");
  const CMatrix n11 = null_block_11(a, b, tol);
  const double na = operator_norm_est(a);
  return psd_sqrt(a * n11 * a.adjoint(), tol, na * na);
}

CMatrix inv_circ(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || !a.is_square() || !b.is_square())
    fail(errc::dimension_mismatch, "inv_circ");
  return psd_sqrt(null_block_11(a, b, tol), tol, 1.0);
}

namespace {

// Orthonormal basis of null(M), as columns.
CMatrix null_basis(const CMatrix& m, const Tolerance& tol) {
  return from_range(null_projection(m, tol), tol, 1.0).basis;
}

struct BlockWitness {
  CMatrix c;
  CMatrix d;
  bool forward;
};

// Single full matrix block. forward: nullity(B) <= nullity(A), C with A = BC.
BlockWitness block_witness(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  const CMatrix za = null_basis(a, tol);
  const CMatrix zb = null_basis(b, tol);
  BlockWitness out;
  out.forward = zb.cols() <= za.cols();
  const CMatrix& num = out.forward ? a : b;
  const CMatrix& den = out.forward ? b : a;
  const CMatrix& znum = out.forward ? za : zb;  // larger nullity
  const CMatrix& zden = out.forward ? zb : za;
  // partial isometry V with V V* = N(den), V* V <= N(num)
  const CMatrix znum_sub = znum.block(0, 0, znum.rows(), zden.cols());
  const CMatrix v = zden * znum_sub.adjoint();
  out.c = douglas_solve(num, den, tol) + v;
  out.d = douglas_solve(den, num, tol) + v.adjoint();
  return out;
}

}  // namespace

EquiRangeWitness equirange_witness(const CMatrix& a, const CMatrix& b, const RepAlgebra& alg,
                                   const Tolerance& tol) {
  if (a.rows() != alg.ambient_dim() || b.rows() != alg.ambient_dim() || !a.is_square() ||
      !b.is_square())
    fail(errc::dimension_mismatch, "equirange witness");
  if (!algebra_membership(a, alg, tol) || !algebra_membership(b, alg, tol))
    fail(errc::not_in_algebra, "equirange witness operands");

  EquiRangeWitness out;
  std::vector<CMatrix> c_comps, d_comps, p_comps, q_comps;
  for (size_t i = 0; i < alg.blocks.size(); ++i) {
    const CMatrix ai = block_component(a, alg, static_cast<int>(i));
    const CMatrix bi = block_component(b, alg, static_cast<int>(i));
    if (subspace_distance(from_range(ai, tol), from_range(bi, tol)) >= tol.eq_abs)
      fail(errc::ranges_differ, "col(A) != col(B) on block " + std::to_string(i));
    BlockWitness w = block_witness(ai, bi, tol);
    out.per_block.emplace_back(static_cast<int>(i), w.forward
                                                        ? EquiRangeWitness::Direction::forward
                                                        : EquiRangeWitness::Direction::backward);
    c_comps.push_back(std::move(w.c));
    d_comps.push_back(std::move(w.d));
    const int ni = alg.blocks[i].n;
    p_comps.push_back(w.forward ? CMatrix::identity(ni) : CMatrix::zero(ni, ni));
    q_comps.push_back(w.forward ? CMatrix::zero(ni, ni) : CMatrix::identity(ni));
  }
  out.C = assemble(alg, c_comps);
  out.D = assemble(alg, d_comps);
  out.P = assemble(alg, p_comps);
  out.Q = assemble(alg, q_comps);
  return out;
}

}  // namespace maff
