#pragma once

#include "maffkit/rep_algebra.hpp"
#include "maffkit/subspace.hpp"

namespace maff {

/// col(A) ⊆ col(B), certified by ||(I - R(B)) A||_2 below threshold.
bool range_contained(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

/// The unique X with B X = A and R(X) <= R(B*); requires col(A) ⊆ col(B).
CMatrix douglas_solve(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

/// PSD with range col(A) + col(B); equals sqrt(A A* + B B*).
CMatrix box_plus(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

/// PSD with range col(A) ∩ col(B).
CMatrix box_dot(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

/// PSD with range {x : Ax ∈ col(B)}.
CMatrix inv_circ(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

/// Witness that col(A) = col(B): a right-invertible C and central projections
/// P + Q = I with A P = B C P and B Q = A C Q. D is the constructed right
/// inverse, C D = I. Direction is chosen per block by nullity comparison.
struct EquiRangeWitness {
  enum class Direction { forward, backward };  // forward: A = B C on the block
  CMatrix C;
  CMatrix D;
  CMatrix P;
  CMatrix Q;
  std::vector<std::pair<int, Direction>> per_block;
};

EquiRangeWitness equirange_witness(const CMatrix& a, const CMatrix& b, const RepAlgebra& alg,
                                   const Tolerance& tol = {});

}  // namespace maff
