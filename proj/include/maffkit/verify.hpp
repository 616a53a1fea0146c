#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maffkit/functor.hpp"
#include "maffkit/json_io.hpp"
#include "maffkit/kreinext.hpp"

namespace maff::verify {

struct CaseFailure {
  uint64_t case_seed = 0;
  std::string what;
  double observed = 0.0;
  double expected = 0.0;  // bound the observation had to stay below
  json inputs;
};

struct SuiteResult {
  std::string name;
  int cases_run = 0;
  int failures_total = 0;
  std::vector<CaseFailure> failures;  // first few, with serialized inputs
  double wall_seconds = 0.0;

  bool passed() const noexcept { return failures_total == 0; }
};

struct Config {
  uint64_t seed = 42;
  int cases = 0;  // 0 keeps each suite's own default count
  std::vector<int> dims = {2, 3, 4, 5, 6, 7, 8};
  Tolerance tol = {};
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, const Config& cfg);

json report_to_json(const std::vector<SuiteResult>& suites, const Config& cfg,
                    double wall_seconds);

// Seeded generators used by the suites and the test binaries.
namespace gen {

Quotient random_quotient(int n, rng::Engine& eng, const Tolerance& tol = {});

struct PositiveCase {
  Quotient s;
  CMatrix witness;  // PSD total matrix restricting to s on dom(s)
};

PositiveCase random_positive_quotient(int n, rng::Engine& eng, const Tolerance& tol = {});

RepAlgebra random_algebra(rng::Engine& eng, bool need_multiplicity, int max_ambient = 8);

Homomorphism random_hom(const RepAlgebra& source, rng::Engine& eng, int max_block = 8);

Quotient random_affiliated_quotient(const RepAlgebra& alg, rng::Engine& eng,
                                    const Tolerance& tol = {});

/// Well-conditioned invertible matrix.
CMatrix random_invertible(int n, rng::Engine& eng);

}  // namespace gen

}  // namespace maff::verify
