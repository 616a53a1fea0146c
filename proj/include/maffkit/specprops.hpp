#pragma once

#include <cstdint>

#include "maffkit/quotient.hpp"

namespace maff {

/// Closed half-plane: the image of {Re z >= 0} under z -> e^{i theta}(z + alpha).
struct HalfPlane {
  double theta = 0.0;  // in [-pi, pi)
  complexd alpha{0.0, 0.0};
};

/// {lambda : |arg(lambda - c)| <= theta}, theta in [0, pi/2).
struct Sector {
  complexd c{0.0, 0.0};
  double theta = 0.0;
};

/// W(T) ⊆ H_{theta, alpha}, certified by positivity of B*A' + A'*B for the
/// pulled-back numerator A' = e^{i theta'}(A + alpha' B).
bool in_half_plane(const Quotient& t, const HalfPlane& h, const Tolerance& tol = {});

/// W(T) ⊆ R: B*A - A*B = 0.
bool is_symmetric(const Quotient& t, const Tolerance& tol = {});

/// W(T) ⊆ R_{>=0}: B*A Hermitian PSD.
bool is_positive(const Quotient& t, const Tolerance& tol = {});

/// W(T) in the closed right half-plane.
bool is_accretive(const Quotient& t, const Tolerance& tol = {});

bool is_sectorial(const Quotient& t, const Sector& s, const Tolerance& tol = {});

bool is_self_adjoint(const Quotient& t, const Tolerance& tol = {});
bool is_normal(const Quotient& t, const Tolerance& tol = {});

/// The two supporting half-planes whose intersection is the sector.
std::pair<HalfPlane, HalfPlane> sector_half_planes(const Sector& s);

/// <T y, y> for unit vectors y sampled uniformly on the sphere of dom(T);
/// empty when the domain is trivial. Deterministic given the seed.
std::vector<complexd> numerical_range_sample(const Quotient& t, int count, uint64_t rng_seed,
                                             const Tolerance& tol = {});

/// Membership of one point in a half-plane / sector, shared with the
/// sample-consistency tests.
bool half_plane_contains(const HalfPlane& h, complexd z, double slack = 0.0);
bool sector_contains(const Sector& s, complexd z, double slack = 0.0);

}  // namespace maff
