#include "maffkit/graphoracle.hpp"

namespace maff {

namespace {

CMatrix top_block(const CMatrix& stacked, int n) { return stacked.block(0, 0, n, stacked.cols()); }
CMatrix bottom_block(const CMatrix& stacked, int n) {
  return stacked.block(n, 0, n, stacked.cols());
}

/// Orthonormal nullspace basis of M, as columns. Blocks of M come from
/// orthonormal bases and projections, so the nominal scale is 1.
CMatrix null_basis(const CMatrix& m, const Tolerance& tol) {
  return from_range(null_projection(m, tol, 1.0), tol, 1.0).basis;
}

}  // namespace

PartialGraph graph_from_pair(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::dimension_mismatch, "graph from pair");
  return {a.rows(), from_range(vstack(b, a), tol)};
}

PartialGraph graph_from_quotient(const Quotient& t, const Tolerance& tol) {
  return graph_from_pair(t.A, t.B, tol);
}

PartialGraph graph_of_matrix(const CMatrix& m, const Tolerance& tol) {
  return graph_from_pair(m, CMatrix::identity(m.rows()), tol);
}

PartialGraph graph_sum(const PartialGraph& g1, const PartialGraph& g2, const Tolerance& tol) {
  if (g1.n != g2.n) fail(errc::dimension_mismatch, "graph sum");
  const int n = g1.n;
  const CMatrix u1 = top_block(g1.graph.basis, n);
  const CMatrix v1 = bottom_block(g1.graph.basis, n);
  const CMatrix u2 = top_block(g2.graph.basis, n);
  const CMatrix v2 = bottom_block(g2.graph.basis, n);
  // pairs with a common first coordinate: null space of [U1, -U2]
  const CMatrix coupled = hstack(u1, -u2);
  const CMatrix z = null_basis(coupled, tol);
  const CMatrix za = z.block(0, 0, u1.cols(), z.cols());
  const CMatrix zb = z.block(u1.cols(), 0, u2.cols(), z.cols());
  const CMatrix first = u1 * za;
  const CMatrix second = v1 * za + v2 * zb;
  return {n, from_range(vstack(first, second), tol, 1.0)};
}

PartialGraph graph_product(const PartialGraph& g1, const PartialGraph& g2, const Tolerance& tol) {
  if (g1.n != g2.n) fail(errc::dimension_mismatch, "graph product");
  const int n = g1.n;
  const CMatrix u1 = top_block(g1.graph.basis, n);
  const CMatrix v1 = bottom_block(g1.graph.basis, n);
  const CMatrix u2 = top_block(g2.graph.basis, n);
  const CMatrix v2 = bottom_block(g2.graph.basis, n);
  // chains (x, y) in G2, (y, z) in G1: null space of [V2, -U1]
  const CMatrix coupled = hstack(v2, -u1);
  const CMatrix z = null_basis(coupled, tol);
  const CMatrix zb = z.block(0, 0, v2.cols(), z.cols());
  const CMatrix za = z.block(v2.cols(), 0, u1.cols(), z.cols());
  const CMatrix first = u2 * zb;
  const CMatrix second = v1 * za;
  return {n, from_range(vstack(first, second), tol, 1.0)};
}

PartialGraph graph_kaufman(const PartialGraph& g, const Tolerance& tol) {
  const int n = g.n;
  const CMatrix u = top_block(g.graph.basis, n);
  const CMatrix v = bottom_block(g.graph.basis, n);
  // null(T): first components of graph vectors of the form (x, 0)
  const CMatrix zero_second = null_basis(v, tol);
  const CMatrix null_of_t = range_projection(u * zero_second, tol, 1.0);
  const CMatrix complement = CMatrix::identity(n) - null_of_t;
  const CMatrix first = v;
  const CMatrix second = complement * u;
  return {n, from_range(vstack(first, second), tol, 1.0)};
}

PartialGraph graph_adjoint(const PartialGraph& g, const Tolerance& tol) {
  const int n = g.n;
  const int k = g.graph.dim();
  const CMatrix u = top_block(g.graph.basis, n);
  const CMatrix v = bottom_block(g.graph.basis, n);
  const Subspace dom = graph_domain(g, tol);
  // graph(T*) = {(y, z) : z in closure(dom), (z, -y) ⊥ graph(T)}, i.e.
  // W(G^perp) ∩ (C^n ⊕ dom) for W(a, b) = (b, -a), computed as one stacked
  // nullspace so the rank decision carries the whole construction.
  CMatrix cons(k + n, 2 * n);
  cons.set_block(0, 0, -v.adjoint());
  cons.set_block(0, n, u.adjoint());
  cons.set_block(k, n, CMatrix::identity(n) - dom.projection());
  return {n, from_range(null_projection(cons, tol, 1.0), tol, 1.0)};
}

PartialGraph graph_op(GraphOp kind, const PartialGraph& g1, const PartialGraph* g2,
                      const Tolerance& tol) {
  switch (kind) {
    case GraphOp::sum:
      if (!g2) fail(errc::bad_input, "graph sum needs two operands");
      return graph_sum(g1, *g2, tol);
    case GraphOp::product:
      if (!g2) fail(errc::bad_input, "graph product needs two operands");
      return graph_product(g1, *g2, tol);
    case GraphOp::kaufman:
      return graph_kaufman(g1, tol);
    case GraphOp::adjoint:
      return graph_adjoint(g1, tol);
  }
  fail(errc::bad_input, "unknown graph operation");
}

bool graph_equals(const PartialGraph& g1, const PartialGraph& g2, const Tolerance& tol) {
  if (g1.n != g2.n) fail(errc::dimension_mismatch, "graph equality");
  return graph_distance(g1, g2) < tol.eq_abs;
}

double graph_distance(const PartialGraph& g1, const PartialGraph& g2) {
  return subspace_distance(g1.graph, g2.graph);
}

Subspace graph_domain(const PartialGraph& g, const Tolerance& tol) {
  return from_range(top_block(g.graph.basis, g.n), tol, 1.0);
}

bool graph_single_valued(const PartialGraph& g, const Tolerance& tol) {
  Subspace vertical{2 * g.n,
                    vstack(CMatrix::zero(g.n, g.n), CMatrix::identity(g.n))};
  return subspace_intersect(g.graph, vertical, tol).dim() == 0;
}

CMatrix schur_shorted(const CMatrix& a, const CMatrix& e, const Tolerance& tol) {
  if (!a.is_square() || !e.is_square() || a.rows() != e.rows())
    fail(errc::dimension_mismatch, "schur_shorted");
  const int n = a.rows();
  const double scale = std::max(1.0, a.fro_norm());
  if (a.hermitian_defect() > tol.eq_abs * scale) fail(errc::not_psd, "A must be Hermitian PSD");
  if (min_eigenvalue(0.5 * (a + a.adjoint()), tol) < -n * tol.eq_abs * scale)
    fail(errc::not_psd, "A must be PSD");
  if (e.hermitian_defect() > tol.eq_abs || (e * e - e).fro_norm() > tol.eq_abs * n)
    fail(errc::not_projection, "E must be a Hermitian idempotent");

  const CMatrix inside = from_range(e, tol, 1.0).basis;
  const CMatrix outside = from_range(CMatrix::identity(n) - e, tol, 1.0).basis;
  const CMatrix w = hstack(inside, outside);  // unitary when e is a projection
  const CMatrix rotated = w.adjoint() * a * w;
  const int r = inside.cols();
  const CMatrix a11 = rotated.block(0, 0, r, r);
  const CMatrix a12 = rotated.block(0, r, r, n - r);
  const CMatrix a21 = rotated.block(r, 0, n - r, r);
  const CMatrix a22 = rotated.block(r, r, n - r, n - r);
  const CMatrix schur = a11 - a12 * hermitian_pseudo_inverse(0.5 * (a22 + a22.adjoint()), tol) * a21;
  CMatrix padded(n, n);
  padded.set_block(0, 0, schur);
  return w * padded * w.adjoint();
}

}  // namespace maff
