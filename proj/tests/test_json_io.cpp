#include <doctest.h>

#include "maffkit/json_io.hpp"
#include "maffkit/rng.hpp"
#include "maffkit/verify.hpp"

using namespace maff;

namespace {
const Tolerance kTol;

bool bit_equal(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.data().size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}
}  // namespace

TEST_CASE("matrix round trip is bitwise lossless") {
  rng::Engine eng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = rng::gaussian_matrix(rng::uniform_int(eng, 0, 6),
                                           rng::uniform_int(eng, 0, 6), eng);
    const json serialized = json::parse(to_json(m).dump());
    CHECK(bit_equal(matrix_from_json(serialized), m));
  }
}

TEST_CASE("quotient, algebra and homomorphism round trips") {
  rng::Engine eng(2);
  const Quotient t = verify::gen::random_quotient(4, eng, kTol);
  const Quotient t2 = quotient_from_json(json::parse(to_json(t).dump()), kTol);
  CHECK(bit_equal(t2.A, t.A));
  CHECK(bit_equal(t2.B, t.B));

  const RepAlgebra alg = verify::gen::random_algebra(eng, true, 8);
  const RepAlgebra alg2 = algebra_from_json(json::parse(to_json(alg).dump()));
  REQUIRE(alg2.blocks.size() == alg.blocks.size());
  for (size_t i = 0; i < alg.blocks.size(); ++i) {
    CHECK(alg2.blocks[i].n == alg.blocks[i].n);
    CHECK(alg2.blocks[i].k == alg.blocks[i].k);
  }

  const Homomorphism phi = verify::gen::random_hom(alg, eng, 6);
  const Homomorphism phi2 =
      hom_from_json(json::parse(to_json(phi).dump()), phi.source, phi.target, kTol);
  CHECK(phi2.mult == phi.mult);
  for (size_t j = 0; j < phi.conjugators.size(); ++j)
    CHECK(bit_equal(phi2.conjugators[j], phi.conjugators[j]));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2}, {"cols", 2}}), Error);
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2},
                                        {"cols", 1},
                                        {"data", json::array({json::array({1.0, 0.0})})}}),
                  Error);
  json bad = json{{"rows", 1},
                  {"cols", 1},
                  {"data", json::array({json::array({
                               std::numeric_limits<double>::infinity(), 0.0})})}};
  CHECK_THROWS_AS(matrix_from_json(bad), Error);
}

TEST_CASE("tolerance files") {
  const Tolerance tol = tolerance_from_json(json{{"eq_abs", 1e-6}});
  CHECK(tol.eq_abs == 1e-6);
  CHECK(tol.rank_scale == 128.0);
  CHECK_THROWS_AS(tolerance_from_json(json{{"eq_abs", -1.0}}), Error);
  const json round = json::parse(to_json(tol).dump());
  CHECK(tolerance_from_json(round).eq_abs == 1e-6);
}

TEST_CASE("verify report shape") {
  verify::Config cfg;
  cfg.cases = 2;
  cfg.dims = {2, 3};
  const auto result = verify::run_suite("lattice", cfg);
  CHECK(result.cases_run == 2);
  CHECK(result.passed());
  const json report = verify::report_to_json({result}, cfg, 0.5);
  CHECK(report["failures_total"] == 0);
  CHECK(report["suites"][0]["name"] == "lattice");
  CHECK(report["suites"][0]["cases_run"] == 2);
}
