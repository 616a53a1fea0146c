#include <doctest.h>

#include "maffkit/rng.hpp"
#include "maffkit/subspace.hpp"

using namespace maff;

namespace {
const Tolerance kTol;

Subspace span_e(int n, int index) {
  CMatrix basis(n, 1);
  basis.at(index, 0) = 1.0;
  return {n, basis};
}
}  // namespace

TEST_CASE("from_range produces an orthonormal basis of the column space") {
  rng::Engine eng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng::uniform_int(eng, 1, 8);
    const int r = rng::uniform_int(eng, 0, n);
    const CMatrix a = rng::matrix_with_rank(n, r, eng);
    const Subspace v = from_range(a, kTol);
    CHECK(v.dim() == r);
    CHECK((v.basis.adjoint() * v.basis - CMatrix::identity(r)).fro_norm() < 1e-12);
    // P_V A = A
    CHECK(operator_norm(v.projection() * a - a) < 1e-10);
  }
}

TEST_CASE("sum and intersection of coordinate spans") {
  const Subspace e1 = span_e(2, 0);
  const Subspace e2 = span_e(2, 1);
  CHECK(subspace_sum(e1, e2, kTol).dim() == 2);
  CHECK(subspace_intersect(e1, e2, kTol).dim() == 0);
}

TEST_CASE("preimage example") {
  // A maps e2 -> e1, e1 -> 0; every x lands in span(e1)
  const CMatrix a = CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const Subspace w = span_e(2, 0);
  CHECK(preimage(a, w, kTol).dim() == 2);
}

TEST_CASE("containment and distance") {
  const Subspace e1 = span_e(3, 0);
  const Subspace e12 = subspace_sum(e1, span_e(3, 1), kTol);
  CHECK(subspace_contains(e1, e12, kTol));
  CHECK(!subspace_contains(e12, e1, kTol));
  CHECK(subspace_distance(e1, e1) < 1e-12);
  CHECK(subspace_distance(e1, span_e(3, 1)) == doctest::Approx(1.0));
}

TEST_CASE("lattice axioms on random subspaces") {
  rng::Engine eng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng::uniform_int(eng, 2, 7);
    const Subspace v = from_range(rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng),
                                  kTol);
    const Subspace w = from_range(rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng),
                                  kTol);
    const Subspace sum = subspace_sum(v, w, kTol);
    const Subspace meet = subspace_intersect(v, w, kTol);
    CHECK(subspace_contains(v, sum, kTol));
    CHECK(subspace_contains(w, sum, kTol));
    CHECK(subspace_contains(meet, v, kTol));
    CHECK(subspace_contains(meet, w, kTol));
    CHECK(sum.dim() + meet.dim() == v.dim() + w.dim());
  }
}

TEST_CASE("range of A equals range of sqrt(A A*)") {
  rng::Engine eng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng::uniform_int(eng, 1, 8);
    const CMatrix a = rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const Subspace lhs = from_range(a, kTol);
    const Subspace rhs = from_range(psd_sqrt(a * a.adjoint(), kTol), kTol);
    CHECK(subspace_distance(lhs, rhs) < kTol.eq_abs);
  }
}
