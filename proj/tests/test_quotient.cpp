#include <doctest.h>

#include "maffkit/graphoracle.hpp"
#include "maffkit/quotient.hpp"
#include "maffkit/rng.hpp"
#include "maffkit/verify.hpp"

using namespace maff;

namespace {
const Tolerance kTol;

CMatrix e1_vec(int n) {
  CMatrix v(n, 1);
  v.at(0, 0) = 1.0;
  return v;
}
}  // namespace

TEST_CASE("quotient_new validates the nullspace condition") {
  rng::Engine eng(1);
  CHECK_NOTHROW(quotient_new(rng::gaussian_matrix(2, 2, eng), CMatrix::identity(2), kTol));
  const Quotient triv = quotient_new(CMatrix(2, 2), CMatrix(2, 2), kTol);
  CHECK(numerical_rank(triv.B, kTol) == 0);
  CHECK_THROWS_AS(quotient_new(CMatrix::identity(2), CMatrix::diag({1.0, 0.0}), kTol), Error);
}

TEST_CASE("canonicalize on pinned inputs") {
  rng::Engine eng(2);
  const CMatrix a = rng::gaussian_matrix(2, 2, eng);
  const CanonicalQuotient total = canonicalize(total_quotient(a), kTol);
  CHECK((total.M - a).fro_norm() < 1e-12);
  CHECK((total.E - CMatrix::identity(2)).fro_norm() < 1e-12);

  const CanonicalQuotient half =
      canonicalize(quotient_new(CMatrix::diag({1.0, 0.0}), CMatrix::diag({2.0, 0.0}), kTol),
                   kTol);
  CHECK((half.M - CMatrix::diag({0.5, 0.0})).fro_norm() < 1e-12);
  CHECK((half.E - CMatrix::diag({1.0, 0.0})).fro_norm() < 1e-12);

  const CanonicalQuotient triv = canonicalize(trivial_quotient(2), kTol);
  CHECK(triv.M.fro_norm() == 0.0);
  CHECK(triv.E.fro_norm() == 0.0);
}

TEST_CASE("quotient_apply on and off the domain") {
  const Quotient t = quotient_new(CMatrix::diag({2.0, 0.0}), CMatrix::diag({1.0, 0.0}), kTol);
  const CMatrix y = quotient_apply(t, e1_vec(2), kTol);
  CHECK((y - 2.0 * e1_vec(2)).fro_norm() < 1e-12);
  CHECK_THROWS_AS(quotient_apply(trivial_quotient(2), e1_vec(2), kTol), Error);

  rng::Engine eng(3);
  const CMatrix a = rng::gaussian_matrix(3, 3, eng);
  const CMatrix x = rng::unit_vector(3, eng);
  CHECK((quotient_apply(total_quotient(a), x, kTol) - a * x).fro_norm() < 1e-12);
}

TEST_CASE("sum with the trivial operator collapses the domain") {
  rng::Engine eng(5);
  const Quotient t = verify::gen::random_quotient(3, eng, kTol);
  const Quotient s = quotient_sum(t, trivial_quotient(3), kTol);
  CHECK(numerical_rank(s.B, kTol) == 0);
  CHECK(quotient_equals(s, trivial_quotient(3), kTol));
}

TEST_CASE("sum and product of total operators reduce to matrix arithmetic") {
  rng::Engine eng(6);
  const CMatrix a1 = rng::gaussian_matrix(3, 3, eng);
  const CMatrix a2 = rng::gaussian_matrix(3, 3, eng);
  CHECK(quotient_equals(quotient_sum(total_quotient(a1), total_quotient(a2), kTol),
                        total_quotient(a1 + a2), kTol));
  CHECK(quotient_equals(quotient_product(total_quotient(a1), total_quotient(a2), kTol),
                        total_quotient(a1 * a2), kTol));
  CHECK(quotient_equals(quotient_product(total_quotient(a1), total_quotient(CMatrix::identity(3)),
                                         kTol),
                        total_quotient(a1), kTol));
}

TEST_CASE("sum of restrictions to orthogonal domains is trivial") {
  const Quotient t1 = quotient_new(CMatrix::diag({1.0, 0.0}), CMatrix::diag({1.0, 0.0}), kTol);
  const Quotient t2 = quotient_new(CMatrix::diag({0.0, 1.0}), CMatrix::diag({0.0, 1.0}), kTol);
  CHECK(quotient_equals(quotient_sum(t1, t2, kTol), trivial_quotient(2), kTol));
}

TEST_CASE("product picks up the composed domain") {
  // T1 restricted to span(e1); T2 total with N e2 = e1, N e1 = 0
  const Quotient t1 = quotient_new(CMatrix::diag({2.0, 0.0}), CMatrix::diag({1.0, 0.0}), kTol);
  const CMatrix nilpotent = CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const Quotient t2 = total_quotient(nilpotent);
  const Quotient prod = quotient_product(t1, t2, kTol);
  const PartialGraph got = graph_from_quotient(prod, kTol);
  const PartialGraph want =
      graph_product(graph_from_quotient(t1, kTol), graph_from_quotient(t2, kTol), kTol);
  CHECK(graph_distance(got, want) < 1e-8);
  // e2 lies in the composed domain
  CMatrix e2(2, 1);
  e2.at(1, 0) = 1.0;
  CHECK((quotient_apply(prod, e2, kTol) - 2.0 * e1_vec(2)).fro_norm() < 1e-10);
}

TEST_CASE("quotient_right_mul on pinned inputs") {
  const Quotient t = quotient_new(CMatrix::diag({2.0, 0.0}), CMatrix::diag({1.0, 0.0}), kTol);
  CHECK((quotient_right_mul(t, CMatrix::diag({3.0, 0.0}), kTol) - CMatrix::diag({6.0, 0.0}))
            .fro_norm() < 1e-10);
  CHECK(quotient_right_mul(t, CMatrix(2, 2), kTol).fro_norm() < 1e-12);
  // C = B returns A (within the nullspace convention)
  rng::Engine eng(7);
  const Quotient t2 = verify::gen::random_quotient(4, eng, kTol);
  const CMatrix back = quotient_right_mul(t2, t2.B, kTol);
  CHECK(operator_norm(back - t2.A * (CMatrix::identity(4) - null_projection(t2.B, kTol))) <
        1e-9);
  CHECK_THROWS_AS(quotient_right_mul(t, CMatrix::identity(2), kTol), Error);
}

TEST_CASE("kaufman inverse on pinned inputs") {
  // projection: dagger is the restriction of the identity to the range
  const CMatrix e = CMatrix::diag({1.0, 0.0});
  const KaufmanResult kr = quotient_kaufman(quotient_new(e, CMatrix::identity(2), kTol), kTol);
  const PartialGraph got = graph_from_quotient(kr.dagger, kTol);
  const PartialGraph want = graph_from_pair(e, e, kTol);
  CHECK(graph_distance(got, want) < 1e-8);

  const KaufmanResult ident = quotient_kaufman(total_quotient(CMatrix::identity(2)), kTol);
  CHECK(quotient_equals(ident.dagger, total_quotient(CMatrix::identity(2)), kTol));

  const KaufmanResult half = quotient_kaufman(total_quotient(CMatrix::diag({2.0, 0.0})), kTol);
  CHECK((half.null_proj - CMatrix::diag({0.0, 1.0})).fro_norm() < 1e-10);
  CMatrix two_e1 = 2.0 * e1_vec(2);
  CHECK((quotient_apply(half.dagger, two_e1, kTol) - e1_vec(2)).fro_norm() < 1e-10);
}

TEST_CASE("adjoint on pinned inputs") {
  rng::Engine eng(8);
  const CMatrix a = rng::gaussian_matrix(3, 3, eng);
  CHECK(quotient_equals(quotient_adjoint(total_quotient(a), kTol),
                        total_quotient(a.adjoint()), kTol));
  // adjoint of the trivial operator is the total zero operator
  CHECK(quotient_equals(quotient_adjoint(trivial_quotient(3), kTol),
                        total_quotient(CMatrix(3, 3)), kTol));
  // restriction of diag(2, 0) to span(e1): adjoint is the total diag(2, 0)
  const Quotient t = quotient_new(CMatrix::diag({2.0, 0.0}), CMatrix::diag({1.0, 0.0}), kTol);
  CHECK(quotient_equals(quotient_adjoint(t, kTol), total_quotient(CMatrix::diag({2.0, 0.0})),
                        kTol));
  // involution on total operators
  CHECK(quotient_equals(quotient_adjoint(quotient_adjoint(total_quotient(a), kTol), kTol),
                        total_quotient(a), kTol));
}

TEST_CASE("equality is representation independent") {
  rng::Engine eng(9);
  const Quotient t = verify::gen::random_quotient(4, eng, kTol);
  const CMatrix c = rng::matrix_with_rank(4, 4, eng);
  CHECK(quotient_equals(t, quotient_new(t.A * c, t.B * c, kTol), kTol));
  CHECK(!quotient_equals(total_quotient(CMatrix::identity(2)),
                         total_quotient(CMatrix(2, 2)), kTol));
  CHECK(quotient_equals(quotient_new(CMatrix::diag({1.0, 0.0}), CMatrix::diag({2.0, 0.0}), kTol),
                        quotient_new(CMatrix::diag({2.0, 0.0}), CMatrix::diag({4.0, 0.0}), kTol),
                        kTol));
}

TEST_CASE("extension order") {
  rng::Engine eng(10);
  const Quotient t = verify::gen::random_quotient(4, eng, kTol);
  CHECK(quotient_extends(t, t, kTol));
  CHECK(quotient_extends(trivial_quotient(4), t, kTol));
  const CMatrix z = rng::matrix_with_rank(4, 2, eng);
  const Quotient restricted = quotient_new(t.A * z, t.B * z, kTol);
  CHECK(quotient_extends(restricted, t, kTol));
  const auto witness = extension_witness(restricted, t, kTol);
  REQUIRE(witness.has_value());
  CHECK(operator_norm(restricted.A - t.A * *witness) < 1e-9);
  CHECK(operator_norm(restricted.B - t.B * *witness) < 1e-9);
}

TEST_CASE("characteristic projection on pinned inputs") {
  const CMatrix chi_zero = characteristic_projection(total_quotient(CMatrix(2, 2)), kTol);
  CMatrix want(4, 4);
  want.set_block(0, 0, CMatrix::identity(2));
  CHECK((chi_zero - want).fro_norm() < 1e-12);

  const CMatrix chi_id = characteristic_projection(total_quotient(CMatrix::identity(2)), kTol);
  CMatrix half(4, 4);
  half.set_block(0, 0, 0.5 * CMatrix::identity(2));
  half.set_block(0, 2, 0.5 * CMatrix::identity(2));
  half.set_block(2, 0, 0.5 * CMatrix::identity(2));
  half.set_block(2, 2, 0.5 * CMatrix::identity(2));
  CHECK((chi_id - half).fro_norm() < 1e-12);

  CHECK(characteristic_projection(trivial_quotient(3), kTol).fro_norm() == 0.0);

  // chi is a Hermitian idempotent whose range is the graph
  rng::Engine eng(11);
  const Quotient t = verify::gen::random_quotient(3, eng, kTol);
  const CMatrix chi = characteristic_projection(t, kTol);
  CHECK(chi.hermitian_defect() < 1e-10);
  CHECK(operator_norm(chi * chi - chi) < 1e-10);
  CHECK(subspace_distance(from_range(chi, kTol), graph_from_quotient(t, kTol).graph) < 1e-8);
  // dom(T) = ran(E11) + ran(E12)
  const CMatrix e11 = chi.block(0, 0, 3, 3);
  const CMatrix e12 = chi.block(0, 3, 3, 3);
  CHECK(subspace_distance(from_range(box_plus(e11, e12, kTol), kTol), from_range(t.B, kTol)) <
        1e-8);
}

TEST_CASE("closed decomposition recomposes") {
  rng::Engine eng(12);
  const Quotient t = verify::gen::random_quotient(3, eng, kTol);
  SUBCASE("identity seed") {
    const ClosedDecomposition d = closed_decomposition(t, kTol);
    CHECK((d.E - dom_projection(t, kTol)).fro_norm() < 1e-10);
    const Quotient recomposed =
        quotient_product(quotient_new(CMatrix::identity(3), d.P, kTol),
                         quotient_new(d.A, d.E, kTol), kTol);
    CHECK(quotient_equals(recomposed, t, kTol));
  }
  SUBCASE("random positive-definite seed") {
    const CMatrix p = rng::psd_with_rank(3, 3, eng) + 0.5 * CMatrix::identity(3);
    const ClosedDecomposition d = closed_decomposition(t, kTol, p);
    const Quotient recomposed =
        quotient_product(quotient_new(CMatrix::identity(3), d.P, kTol),
                         quotient_new(d.A, d.E, kTol), kTol);
    CHECK(quotient_equals(recomposed, t, kTol));
  }
  SUBCASE("diag seed example") {
    const Quotient tm = total_quotient(rng::gaussian_matrix(2, 2, eng));
    const CMatrix seed = CMatrix::diag({1.0, 2.0});
    const ClosedDecomposition d = closed_decomposition(tm, kTol, seed);
    CHECK((d.A - seed * canonicalize(tm, kTol).M).fro_norm() < 1e-10);
  }
}

TEST_CASE("inverse of an injective quotient") {
  CHECK(quotient_equals(quotient_inverse(total_quotient(CMatrix::identity(2)), kTol),
                        total_quotient(CMatrix::identity(2)), kTol));
  const Quotient t = quotient_new(CMatrix::diag({2.0, 0.0}), CMatrix::diag({1.0, 0.0}), kTol);
  const Quotient inv = quotient_inverse(t, kTol);
  CMatrix two_e1 = 2.0 * e1_vec(2);
  CHECK((quotient_apply(inv, two_e1, kTol) - e1_vec(2)).fro_norm() < 1e-10);
  CHECK_THROWS_AS(quotient_inverse(quotient_new(CMatrix::diag({1.0, 0.0}),
                                                CMatrix::identity(2), kTol),
                                   kTol),
                  Error);

  // the composition is the identity on dom(T), i.e. the quotient (B, B)
  rng::Engine eng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng::uniform_int(eng, 2, 5);
    const int r = rng::uniform_int(eng, 1, n);
    const CMatrix b = rng::matrix_with_rank(n, r, eng);
    // same nullspace on both sides keeps the quotient injective
    const CMatrix a = rng::matrix_with_rank(n, n, eng) * b;
    const Quotient tq = quotient_new(a, b, kTol);
    const Quotient tinv = quotient_inverse(tq, kTol);
    CHECK(quotient_equals(quotient_product(tinv, tq, kTol), quotient_new(b, b, kTol), kTol));
  }
}

TEST_CASE("equal quotients admit a simultaneous rescaling witness") {
  rng::Engine eng(20);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng::uniform_int(eng, 2, 5);
    const Quotient t1 = verify::gen::random_quotient(n, eng, kTol);
    const CMatrix c = rng::matrix_with_rank(n, n, eng);
    const Quotient t2 = quotient_new(t1.A * c, t1.B * c, kTol);
    REQUIRE(quotient_equals(t1, t2, kTol));
    // mutual extension gives a witness in each direction
    const auto fwd = extension_witness(t1, t2, kTol);
    const auto bwd = extension_witness(t2, t1, kTol);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    CHECK(operator_norm(t1.A - t2.A * *fwd) < 1e-8);
    CHECK(operator_norm(t1.B - t2.B * *fwd) < 1e-8);
    CHECK(operator_norm(t2.A - t1.A * *bwd) < 1e-8);
    CHECK(operator_norm(t2.B - t1.B * *bwd) < 1e-8);
  }
}

TEST_CASE("extension order is a partial order up to equality") {
  rng::Engine eng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng::uniform_int(eng, 2, 5);
    const Quotient t = verify::gen::random_quotient(n, eng, kTol);
    const CMatrix z1 = rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const CMatrix z2 = rng::matrix_with_rank(n, rng::uniform_int(eng, 0, n), eng);
    const Quotient once = quotient_new(t.A * z1, t.B * z1, kTol);
    const Quotient twice = quotient_new(once.A * z2, once.B * z2, kTol);
    CHECK(quotient_extends(t, t, kTol));
    CHECK(quotient_extends(once, t, kTol));
    CHECK(quotient_extends(twice, once, kTol));
    CHECK(quotient_extends(twice, t, kTol));  // transitivity along the chain
    // mutual extension collapses to equality
    const CMatrix c = rng::matrix_with_rank(n, n, eng);
    const Quotient same = quotient_new(t.A * c, t.B * c, kTol);
    CHECK(quotient_extends(t, same, kTol));
    CHECK(quotient_extends(same, t, kTol));
    CHECK(quotient_equals(t, same, kTol));
  }
}

TEST_CASE("double dagger restricts away the nullspace") {
  rng::Engine eng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Quotient t = verify::gen::random_quotient(4, eng, kTol);
    const KaufmanResult once = quotient_kaufman(t, kTol);
    const KaufmanResult twice = quotient_kaufman(once.dagger, kTol);
    const PartialGraph got = graph_from_quotient(twice.dagger, kTol);
    const PartialGraph want =
        graph_kaufman(graph_kaufman(graph_from_quotient(t, kTol), kTol), kTol);
    CHECK(graph_distance(got, want) < 1e-7);
  }
}
