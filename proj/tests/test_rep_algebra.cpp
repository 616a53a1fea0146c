#include <doctest.h>

#include "maffkit/functor.hpp"
#include "maffkit/rng.hpp"
#include "maffkit/verify.hpp"

using namespace maff;

namespace {
const Tolerance kTol;
}

TEST_CASE("assembly and block components round trip") {
  rng::Engine eng(1);
  const RepAlgebra alg{{{2, 2}, {1, 3}}};
  CHECK(alg.ambient_dim() == 7);
  std::vector<CMatrix> comps = {rng::gaussian_matrix(2, 2, eng), rng::gaussian_matrix(1, 1, eng)};
  const CMatrix x = assemble(alg, comps);
  CHECK((block_component(x, alg, 0) - comps[0]).fro_norm() < 1e-13);
  CHECK((block_component(x, alg, 1) - comps[1]).fro_norm() < 1e-13);
  CHECK(algebra_membership(x, alg, kTol));
  CHECK(algebra_membership(CMatrix::identity(7), alg, kTol));
  CHECK(!algebra_membership(rng::gaussian_matrix(7, 7, eng), alg, kTol));
}

TEST_CASE("commutant unitaries commute with algebra elements") {
  rng::Engine eng(2);
  const RepAlgebra alg{{{2, 2}, {1, 2}}};
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix x = random_element(alg, eng);
    const CMatrix u = random_commutant_unitary(alg, eng);
    CHECK(operator_norm_est(u * u.adjoint() - CMatrix::identity(alg.ambient_dim())) < 1e-10);
    CHECK(operator_norm_est(u * x - x * u) < 1e-10);
  }
}

TEST_CASE("identity homomorphism is the identity") {
  rng::Engine eng(3);
  const RepAlgebra alg{{{2, 1}, {1, 2}}};
  const Homomorphism id = Homomorphism::identity(alg);
  id.validate(kTol);
  const CMatrix x = random_element(alg, eng);
  CHECK((hom_apply(id, x, kTol) - x).fro_norm() < 1e-12);
}

TEST_CASE("hom_apply is unital, multiplicative and star-preserving") {
  rng::Engine eng(4);
  for (int trial = 0; trial < 15; ++trial) {
    const RepAlgebra src = verify::gen::random_algebra(eng, false, 6);
    const Homomorphism phi = verify::gen::random_hom(src, eng, 6);
    phi.validate(kTol);
    const CMatrix x = random_element(src, eng);
    const CMatrix y = random_element(src, eng);
    const CMatrix fx = hom_apply(phi, x, kTol);
    const CMatrix fy = hom_apply(phi, y, kTol);
    CHECK(operator_norm_est(hom_apply(phi, CMatrix::identity(src.ambient_dim()), kTol) -
                            CMatrix::identity(phi.target.ambient_dim())) < 1e-10);
    CHECK(operator_norm_est(hom_apply(phi, x * y, kTol) - fx * fy) < 1e-9);
    CHECK(operator_norm_est(hom_apply(phi, x.adjoint(), kTol) - fx.adjoint()) < 1e-10);
    CHECK(algebra_membership(fx, phi.target, kTol));
  }
  // a generic matrix is outside any algebra with a nontrivial commutant
  const RepAlgebra amplified{{{2, 2}}};
  const Homomorphism phi = verify::gen::random_hom(amplified, eng, 6);
  CHECK_THROWS_AS(hom_apply(phi, rng::gaussian_matrix(4, 4, eng), kTol), Error);
}

TEST_CASE("scalar amplification example") {
  const RepAlgebra scalars = RepAlgebra::full(1);
  Homomorphism amp;
  amp.source = scalars;
  amp.target = RepAlgebra{{{2, 1}}};
  amp.mult = {{2}};
  amp.conjugators = {CMatrix::identity(2)};
  amp.validate(kTol);
  CMatrix a(1, 1);
  a.at(0, 0) = complexd(3.0, -1.0);
  const CMatrix got = hom_apply(amp, a, kTol);
  CHECK((got - complexd(3.0, -1.0) * CMatrix::identity(2)).fro_norm() < 1e-13);
}

TEST_CASE("morph_prop: projections of images") {
  rng::Engine eng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const RepAlgebra src = verify::gen::random_algebra(eng, false, 6);
    const Homomorphism phi = verify::gen::random_hom(src, eng, 6);
    const CMatrix x = random_element(src, eng);
    CHECK(operator_norm_est(hom_apply(phi, range_projection(x, kTol), kTol) -
                            range_projection(hom_apply(phi, x, kTol), kTol)) < 1e-9);
    CHECK(operator_norm_est(hom_apply(phi, null_projection(x, kTol), kTol) -
                            null_projection(hom_apply(phi, x, kTol), kTol)) < 1e-9);
  }
}

TEST_CASE("hom_amplify2 equals the entrywise doubling") {
  rng::Engine eng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const RepAlgebra src = verify::gen::random_algebra(eng, false, 5);
    const Homomorphism phi = verify::gen::random_hom(src, eng, 6);
    const Homomorphism amp = hom_amplify2(phi);
    amp.validate(kTol);
    const int n = src.ambient_dim();
    CMatrix x(2 * n, 2 * n);
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj) x.set_block(bi * n, bj * n, random_element(src, eng));
    const CMatrix pm = doubling_permutation(src);
    const CMatrix pn = doubling_permutation(phi.target);
    const CMatrix via_amplified = pn * hom_apply(amp, pm.adjoint() * x * pm, kTol) * pn.adjoint();
    CHECK(operator_norm_est(via_amplified - phi2_apply(phi, x, kTol)) < 1e-9);
  }
}

TEST_CASE("composition of homomorphisms") {
  rng::Engine eng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const RepAlgebra src = verify::gen::random_algebra(eng, false, 5);
    const Homomorphism phi = verify::gen::random_hom(src, eng, 6);
    const Homomorphism psi = verify::gen::random_hom(phi.target, eng, 8);
    const Homomorphism comp = hom_compose(psi, phi);
    comp.validate(kTol);
    const CMatrix x = random_element(src, eng);
    CHECK(operator_norm_est(hom_apply(comp, x, kTol) -
                            hom_apply(psi, hom_apply(phi, x, kTol), kTol)) < 1e-9);
  }
}

TEST_CASE("phi_aff on pinned examples") {
  rng::Engine eng(8);
  const RepAlgebra full2 = RepAlgebra::full(2);
  const Homomorphism id = Homomorphism::identity(full2);
  const Quotient t = verify::gen::random_quotient(2, eng, kTol);
  CHECK(quotient_equals(phi_aff(id, t, kTol), t, kTol));

  // amplification (A, B) -> (A kron I, B kron I) up to the fixed conjugator
  Homomorphism amp;
  amp.source = full2;
  amp.target = RepAlgebra{{{4, 1}}};
  amp.mult = {{2}};
  amp.conjugators = {CMatrix::identity(4)};
  const Quotient image = phi_aff(amp, t, kTol);
  CHECK((image.A - kron(t.A, CMatrix::identity(2))).fro_norm() < 1e-12);
  CHECK((image.B - kron(t.B, CMatrix::identity(2))).fro_norm() < 1e-12);

  // two representations of the same operator map to equal quotients
  const CMatrix c = rng::matrix_with_rank(2, 2, eng);
  CHECK(quotient_equals(phi_aff(amp, quotient_new(t.A * c, t.B * c, kTol), kTol), image, kTol));
}

TEST_CASE("phi_aff_s maps subspaces through projections") {
  rng::Engine eng(9);
  const RepAlgebra src = verify::gen::random_algebra(eng, false, 6);
  const Homomorphism phi = verify::gen::random_hom(src, eng, 6);
  const int n = src.ambient_dim();
  CHECK(phi_aff_s(phi, Subspace::zero(n), kTol).dim() == 0);
  CHECK(phi_aff_s(phi, Subspace::full(n), kTol).dim() == phi.target.ambient_dim());

  const CMatrix x = random_element(src, eng);
  const Subspace v = from_range(x, kTol);
  const Subspace image = phi_aff_s(phi, v, kTol);
  CHECK(subspace_distance(image, from_range(hom_apply(phi, x, kTol), kTol)) < 1e-8);

  // sums are preserved
  const CMatrix y = random_element(src, eng);
  const Subspace w = from_range(y, kTol);
  CHECK(subspace_distance(phi_aff_s(phi, subspace_sum(v, w, kTol), kTol),
                          subspace_sum(phi_aff_s(phi, v, kTol), phi_aff_s(phi, w, kTol), kTol)) <
        1e-8);

  // a generic subspace is not affiliated when the commutant is nontrivial
  const RepAlgebra amplified{{{2, 2}}};
  const Homomorphism id4 = Homomorphism::identity(amplified);
  const Subspace generic = from_range(rng::gaussian_matrix(4, 1, eng), kTol);
  CHECK_THROWS_AS(phi_aff_s(id4, generic, kTol), Error);
}

TEST_CASE("mvn_check accepts affiliated and rejects perturbed quotients") {
  rng::Engine eng(10);
  const RepAlgebra alg{{{2, 2}, {1, 2}}};
  const int n = alg.ambient_dim();
  for (int trial = 0; trial < 5; ++trial) {
    Quotient t = verify::gen::random_affiliated_quotient(alg, eng, kTol);
    while (numerical_rank(t.B, kTol) == 0)
      t = verify::gen::random_affiliated_quotient(alg, eng, kTol);
    CHECK(mvn_check(t, alg, 20, 1234 + trial, kTol));
    const CMatrix noise = 0.3 * rng::gaussian_matrix(n, n, eng) *
                          (CMatrix::identity(n) - null_projection(t.B, kTol));
    CHECK(!mvn_check(quotient_new(t.A + noise, t.B, kTol), alg, 20, 99 + trial, kTol));
  }
  // trivial commutant: everything passes
  const RepAlgebra full3 = RepAlgebra::full(3);
  const Quotient any = verify::gen::random_quotient(3, eng, kTol);
  CHECK(mvn_check(any, full3, 10, 7, kTol));
}

TEST_CASE("characteristic projection commutes with the doubled commutant") {
  rng::Engine eng(11);
  const RepAlgebra alg{{{2, 2}}};
  Quotient t = verify::gen::random_affiliated_quotient(alg, eng, kTol);
  const CMatrix chi = characteristic_projection(t, kTol);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix u = random_commutant_unitary(alg, eng);
    const CMatrix u2 = direct_sum(u, u);
    CHECK(operator_norm_est(chi * u2 - u2 * chi) < 1e-9);
  }
}
