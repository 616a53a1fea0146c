#pragma once

#include "maffkit/quotient.hpp"
#include "maffkit/subspace.hpp"

namespace maff {

// Brute-force reference constructions used to validate quotient arithmetic
// and the shorted operator. Everything here is built from numkernel
// primitives only; it never calls into rangecalc or quotient arithmetic.

/// Partial linear map represented by its graph subspace in C^{2n}. Single
/// valued: no nonzero (0, y) lies in the graph.
struct PartialGraph {
  int n = 0;
  Subspace graph;  // subspace of C^{2n}
};

PartialGraph graph_from_pair(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});
PartialGraph graph_from_quotient(const Quotient& t, const Tolerance& tol = {});

/// Graph of the total operator given by a matrix.
PartialGraph graph_of_matrix(const CMatrix& m, const Tolerance& tol = {});

PartialGraph graph_sum(const PartialGraph& g1, const PartialGraph& g2, const Tolerance& tol = {});

/// Composition T1 T2 (apply the operator of g2 first).
PartialGraph graph_product(const PartialGraph& g1, const PartialGraph& g2,
                           const Tolerance& tol = {});

PartialGraph graph_kaufman(const PartialGraph& g, const Tolerance& tol = {});

PartialGraph graph_adjoint(const PartialGraph& g, const Tolerance& tol = {});

enum class GraphOp { sum, product, kaufman, adjoint };

PartialGraph graph_op(GraphOp kind, const PartialGraph& g1, const PartialGraph* g2,
                      const Tolerance& tol = {});

bool graph_equals(const PartialGraph& g1, const PartialGraph& g2, const Tolerance& tol = {});
double graph_distance(const PartialGraph& g1, const PartialGraph& g2);

/// dom(T): first components of the graph.
Subspace graph_domain(const PartialGraph& g, const Tolerance& tol = {});

bool graph_single_valued(const PartialGraph& g, const Tolerance& tol = {});

/// Schur-complement form of the shorted operator: in a basis adapted to
/// ran(E) ⊕ ran(E)^perp, (A11 - A12 A22^+ A21) ⊕ 0 rotated back.
CMatrix schur_shorted(const CMatrix& a, const CMatrix& e, const Tolerance& tol = {});

}  // namespace maff
