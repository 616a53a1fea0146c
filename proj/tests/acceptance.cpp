// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exits nonzero when
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "maffkit/verify.hpp"

namespace {

using maff::CMatrix;
using maff::json;
using maff::Quotient;
using maff::Tolerance;

struct Criterion {
  std::string label;
  bool passed = false;
  std::string detail;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

maff::verify::SuiteResult run(const std::string& name, uint64_t seed = 42) {
  maff::verify::Config cfg;
  cfg.seed = seed;
  return maff::verify::run_suite(name, cfg);
}

std::string describe(const maff::verify::SuiteResult& r, double wall_limit = 0.0) {
  std::ostringstream os;
  os << r.cases_run << " cases, " << r.failures_total << " failures, " << std::fixed;
  os.precision(1);
  os << r.wall_seconds << "s";
  if (wall_limit > 0.0) os << " (limit " << wall_limit << "s)";
  if (!r.failures.empty())
    os << "; first: " << r.failures.front().what << " observed " << r.failures.front().observed;
  return os.str();
}

// ---------------------------------------------------------------------------
// CLI end-to-end pieces for criterion 10
// ---------------------------------------------------------------------------

std::string binary_path() {
  if (const char* env = std::getenv("MAFFKIT_BIN")) return env;
  return "./maffkit";
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) result.output.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string write_temp(const std::string& name, const json& j) {
  const std::string path = "/tmp/maffkit_acceptance_" + name + ".json";
  FILE* f = fopen(path.c_str(), "w");
  const std::string text = j.dump();
  fwrite(text.data(), 1, text.size(), f);
  fclose(f);
  return path;
}

Criterion criterion_cli() {
  Criterion c{"cli: verify round-trip and flagged nonexistence", false, ""};
  const std::string bin = binary_path();

  // deterministic full verify run under the wall limit
  const double start = now_seconds();
  const CommandResult all = run_command(bin + " verify --suite all --seed 42");
  const double wall = now_seconds() - start;
  if (all.exit_code != 0) {
    c.detail = "verify --suite all exited " + std::to_string(all.exit_code);
    return c;
  }
  if (wall >= 300.0) {
    c.detail = "verify --suite all took " + std::to_string(wall) + "s";
    return c;
  }

  // byte-determinism apart from the wall-time fields
  const CommandResult again = run_command(bin + " verify --suite lattice --seed 9 --cases 20");
  const CommandResult again2 = run_command(bin + " verify --suite lattice --seed 9 --cases 20");
  json ja = json::parse(again.output);
  json jb = json::parse(again2.output);
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  for (auto& s : ja["suites"]) s.erase("wall_seconds");
  for (auto& s : jb["suites"]) s.erase("wall_seconds");
  if (ja.dump() != jb.dump()) {
    c.detail = "reports differ across identical runs";
    return c;
  }

  // unknown suite name: exit 2
  if (run_command(bin + " verify --suite bogus").exit_code != 2) {
    c.detail = "unknown suite did not exit 2";
    return c;
  }

  // op round trip through files
  const Tolerance tol;
  maff::rng::Engine eng(404);
  const CMatrix a = maff::rng::gaussian_matrix(3, 3, eng);
  const std::string t1 = write_temp("t1", maff::to_json(maff::total_quotient(a)));
  const CommandResult equals = run_command(bin + " op equals " + t1 + " " + t1);
  if (equals.exit_code != 0 || json::parse(equals.output)["equal"] != true) {
    c.detail = "op equals failed on identical operands";
    return c;
  }

  // krein: worked example through the CLI
  const CMatrix e1 = CMatrix::diag({1.0, 0.0});
  const std::string sfile =
      write_temp("worked", maff::to_json(maff::quotient_new(e1, e1, tol)));
  const CommandResult krein = run_command(bin + " krein " + sfile);
  if (krein.exit_code != 0) {
    c.detail = "krein exited " + std::to_string(krein.exit_code);
    return c;
  }
  const json kj = json::parse(krein.output);
  if (kj["friedrichs"] != "unbounded") {
    c.detail = "worked example did not report an unbounded Friedrichs extension";
    return c;
  }
  const CMatrix vn = maff::matrix_from_json(kj["krein_vn"]["A"]);
  if ((vn - e1).fro_norm() > 1e-9) {
    c.detail = "worked example krein_vn mismatch";
    return c;
  }

  // nonexistence example: exit 4, never a fabricated extension
  const CMatrix bad_a = CMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}});
  const std::string bad =
      write_temp("nonexistent", maff::to_json(maff::quotient_new(bad_a, e1, tol)));
  if (run_command(bin + " krein " + bad).exit_code != 4) {
    c.detail = "nonexistence example did not exit 4";
    return c;
  }

  // non-positive input: exit 3
  const std::string neg =
      write_temp("neg", maff::to_json(maff::total_quotient(-CMatrix::identity(2))));
  if (run_command(bin + " krein " + neg).exit_code != 3) {
    c.detail = "non-positive input did not exit 3";
    return c;
  }

  // parse failure: exit 2
  const std::string garbled = "/tmp/maffkit_acceptance_garbled.json";
  FILE* f = fopen(garbled.c_str(), "w");
  fputs("{ not json", f);
  fclose(f);
  if (run_command(bin + " op chi " + garbled).exit_code != 2) {
    c.detail = "parse error did not exit 2";
    return c;
  }

  // tolerance file through the environment variable
  const std::string tolfile = write_temp("tol", json{{"eq_abs", 1e-6}});
  const CommandResult env_run =
      run_command("MAFFKIT_TOL=" + tolfile + " " + bin + " verify --suite lattice --cases 3");
  if (env_run.exit_code != 0 ||
      json::parse(env_run.output)["tolerance"]["eq_abs"] != 1e-6) {
    c.detail = "MAFFKIT_TOL was not honored";
    return c;
  }

  c.passed = true;
  std::ostringstream os;
  os << "verify all " << std::fixed;
  os.precision(1);
  os << wall << "s, exit codes and round-trips as specified";
  c.detail = os.str();
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  {
    const auto r = run("oracle");
    criteria.push_back({"oracle equivalence (sum/product/dagger/adjoint, dims 2-8)",
                        r.passed() && r.wall_seconds < 120.0, describe(r, 120.0)});
  }
  {
    const auto r = run("kaufman");
    criteria.push_back({"Kaufman-inverse identities", r.passed(), describe(r)});
  }
  {
    const auto r = run("douglas");
    criteria.push_back({"Douglas factorization suite", r.passed(), describe(r)});
  }
  {
    const auto r = run("lattice");
    criteria.push_back({"lattice identities against subspace oracles", r.passed(), describe(r)});
  }
  {
    const auto r = run("uniqueness");
    criteria.push_back({"uniqueness / extension / equi-range witness", r.passed(), describe(r)});
  }
  {
    const auto r = run("functor");
    criteria.push_back({"functor laws and graph functoriality", r.passed(), describe(r)});
  }
  {
    const auto r = run("numrange");
    criteria.push_back({"numerical-range predicates vs samples", r.passed(), describe(r)});
  }
  {
    const auto r = run("krein");
    criteria.push_back({"Krein suite (shorted, transform, bounds, functoriality)", r.passed(),
                        describe(r)});
  }
  {
    const auto r = run("mvn");
    criteria.push_back({"MvN affiliation detection", r.passed(), describe(r)});
  }
  criteria.push_back(criterion_cli());

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    if (!c.passed) ++failures;
    std::cout << "[" << (i + 1) << "/" << criteria.size() << "] "
              << (c.passed ? "PASS" : "FAIL") << "  " << c.label << " -- " << c.detail << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
