#pragma once

#include "maffkit/graphoracle.hpp"
#include "maffkit/quotient.hpp"
#include "maffkit/rep_algebra.hpp"

namespace maff {

/// Canonical extension of a homomorphism to quotients: (A, B) -> (Phi(A), Phi(B)).
Quotient phi_aff(const Homomorphism& phi, const Quotient& t, const Tolerance& tol = {});

/// Image of an affiliated subspace, realized through the projection onto V;
/// NotAffiliated when that projection lies outside the source algebra.
Subspace phi_aff_s(const Homomorphism& phi, const Subspace& v, const Tolerance& tol = {});

/// Phi_(2) on 2x2 block matrices over the source, acting on the H ⊕ H layout.
CMatrix phi2_apply(const Homomorphism& phi, const CMatrix& x, const Tolerance& tol = {});

/// Murray-von Neumann affiliation test: graphs of U T U* and T coincide for
/// `samples` Haar-random commutant unitaries U.
bool mvn_check(const Quotient& t, const RepAlgebra& alg, int samples, uint64_t rng_seed,
               const Tolerance& tol = {});

}  // namespace maff
