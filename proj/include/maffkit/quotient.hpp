#pragma once

#include <optional>

#include "maffkit/rangecalc.hpp"

namespace maff {

/// Partial operator T = A B^dagger with dom(T) = col(B), T(Bx) = Ax. Valid
/// only when null(B) ⊆ null(A); construct through quotient_new.
struct Quotient {
  CMatrix A;
  CMatrix B;
  int n = 0;
};

Quotient quotient_new(CMatrix a, CMatrix b, const Tolerance& tol = {});

/// The trivial affiliated operator: the restriction of 0 to {0}.
Quotient trivial_quotient(int n);

/// Everywhere-defined operator (A, I).
Quotient total_quotient(CMatrix a);

/// Equality normal form (M, E): E projects onto dom(T), M = A B^+ acts on it.
struct CanonicalQuotient {
  CMatrix M;
  CMatrix E;
};

CanonicalQuotient canonicalize(const Quotient& t, const Tolerance& tol = {});

/// T x for x in dom(T) (within 1e-8 * ||x||); OutsideDomain otherwise.
CMatrix quotient_apply(const Quotient& t, const CMatrix& x, const Tolerance& tol = {});

Quotient quotient_sum(const Quotient& t1, const Quotient& t2, const Tolerance& tol = {});

/// T1 T2 (apply T2 first).
Quotient quotient_product(const Quotient& t1, const Quotient& t2, const Tolerance& tol = {});

/// T ∘ C as a total matrix; requires col(C) ⊆ dom(T).
CMatrix quotient_right_mul(const Quotient& t, const CMatrix& c, const Tolerance& tol = {});

struct KaufmanResult {
  Quotient dagger;
  CMatrix null_proj;  // projection onto null(T)
};

KaufmanResult quotient_kaufman(const Quotient& t, const Tolerance& tol = {});

Quotient quotient_adjoint(const Quotient& t, const Tolerance& tol = {});

bool quotient_equals(const Quotient& t1, const Quotient& t2, const Tolerance& tol = {});

/// True iff t2 extends t1 (t1 ⊆ t2).
bool quotient_extends(const Quotient& t1, const Quotient& t2, const Tolerance& tol = {});

/// When t1 ⊆ t2, the C with A1 = A2 C and B1 = B2 C.
std::optional<CMatrix> extension_witness(const Quotient& t1, const Quotient& t2,
                                         const Tolerance& tol = {});

/// Projection of C^{2n} onto graph(T).
CMatrix characteristic_projection(const Quotient& t, const Tolerance& tol = {});

/// T = P^{-1} A E^dagger with P positive definite (seeded or identity) and E
/// the domain projection.
struct ClosedDecomposition {
  CMatrix P;
  CMatrix A;
  CMatrix E;
};

ClosedDecomposition closed_decomposition(const Quotient& t, const Tolerance& tol = {},
                                         const std::optional<CMatrix>& p_seed = {});

/// Inverse B/A of a one-to-one quotient (null(A) = null(B)).
Quotient quotient_inverse(const Quotient& t, const Tolerance& tol = {});

/// Scalar affine image e^{i theta} (T + alpha I) as a quotient.
Quotient affine_map(const Quotient& t, double theta, complexd alpha);

/// Projection onto dom(T) = col(B).
CMatrix dom_projection(const Quotient& t, const Tolerance& tol = {});

}  // namespace maff
