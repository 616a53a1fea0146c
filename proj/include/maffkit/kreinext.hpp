#pragma once

#include <optional>

#include "maffkit/quotient.hpp"
#include "maffkit/specprops.hpp"

namespace maff {

/// Largest PSD operator D with D <= A and ran(D) ⊆ ran(E):
/// A^{1/2} N((I - E) A^{1/2}) A^{1/2}.
CMatrix shorted_operator(const CMatrix& a, const CMatrix& e, const Tolerance& tol = {});

/// Partial symmetric contraction M E^dagger on ran(E).
struct SymContraction {
  CMatrix M;
  CMatrix E;
};

/// Validating constructor: M supported on the domain, symmetric there, and
/// of norm at most 1 + eq_abs.
SymContraction sym_contraction(CMatrix m, CMatrix e, const Tolerance& tol = {});

/// Membership in F(H): I - B injective on the domain.
bool is_in_F(const SymContraction& b, const Tolerance& tol = {});

/// Krein transform of a positive quotient: (S + I)x -> (S - I)x on
/// dom(S), with domain ran(S + I).
SymContraction krein_transform(const Quotient& s, const Tolerance& tol = {});

/// (I + B)(I - B)^{-1} on ran(I - B); requires is_in_F(B).
Quotient inverse_krein_transform(const SymContraction& b, const Tolerance& tol = {});

struct ExtensionBounds {
  CMatrix K_min;
  CMatrix K_max;
  CMatrix F;  // projection onto dom(B)^perp
  bool k_max_valid = false;
};

/// K_min = K - D(I+K; F), K_max = K + D(I-K; F) from any Hermitian
/// contractive extension K of B with null(I - K) trivial.
ExtensionBounds extension_bounds(const SymContraction& b, const CMatrix& k,
                                 const Tolerance& tol = {});

/// Hermitian contraction extending B, found by alternating projections
/// between the affine extension set and the unit operator-norm ball, with a
/// shorted-operator retreat when null(I - K) comes out nontrivial.
CMatrix find_initial_extension(const SymContraction& b, const Tolerance& tol = {},
                               int max_iter = 10000);

struct PositiveExtensions {
  Quotient krein_vn;
  std::optional<Quotient> friedrichs;  // empty when null(I - K_max) is nontrivial
  ExtensionBounds bounds;
};

/// Krein-von Neumann and Friedrichs extensions of a positive quotient. The
/// optional witness is a PSD total matrix restricting to S on its domain.
PositiveExtensions positive_extensions(const Quotient& s,
                                       const std::optional<CMatrix>& witness = {},
                                       const Tolerance& tol = {});

/// K_t = (1-t) K_min + t K_max.
CMatrix sample_extension(const ExtensionBounds& bounds, double t);

}  // namespace maff
