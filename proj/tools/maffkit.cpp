// Command-line front end: quotient operations, Krein extensions, and the
// seeded property-verification suites.
//
// Exit codes: 0 success / all suites pass; 1 verification failures;
// 2 usage or parse errors; 3 domain or precondition violations;
// 4 no extension found.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maffkit/verify.hpp"

namespace {

using maff::CMatrix;
using maff::errc;
using maff::json;
using maff::Quotient;
using maff::Tolerance;

int exit_code_for(const maff::Error& e) {
  switch (e.code()) {
    case errc::no_extension_found:
      return 4;
    case errc::bad_input:
      return 2;
    default:
      return 3;
  }
}

Tolerance resolve_tolerance(const std::string& flag_path) {
  if (!flag_path.empty()) return maff::load_tolerance_file(flag_path);
  if (const char* env = std::getenv("MAFFKIT_TOL")) return maff::load_tolerance_file(env);
  return Tolerance{};
}

json canonical_json(const Quotient& t, const Tolerance& tol) {
  const maff::CanonicalQuotient c = maff::canonicalize(t, tol);
  return json{{"A", maff::to_json(c.M)}, {"B", maff::to_json(c.E)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_op(const std::string& kind, const std::vector<std::string>& files,
           const Tolerance& tol) {
  const bool binary = kind == "sum" || kind == "product" || kind == "equals" ||
                      kind == "extends";
  const size_t expected = binary ? 2 : 1;
  if (files.size() != expected) {
    std::cerr << "op " << kind << " expects " << expected << " operand file(s)\n";
    return 2;
  }
  const Quotient t1 = maff::quotient_from_json(maff::parse_file(files[0]), tol);
  if (kind == "sum" || kind == "product" || kind == "equals" || kind == "extends") {
    const Quotient t2 = maff::quotient_from_json(maff::parse_file(files[1]), tol);
    if (kind == "sum") emit(canonical_json(maff::quotient_sum(t1, t2, tol), tol));
    else if (kind == "product") emit(canonical_json(maff::quotient_product(t1, t2, tol), tol));
    else if (kind == "equals") emit(json{{"equal", maff::quotient_equals(t1, t2, tol)}});
    else emit(json{{"extends", maff::quotient_extends(t1, t2, tol)}});
    return 0;
  }
  if (kind == "dagger") {
    emit(canonical_json(maff::quotient_kaufman(t1, tol).dagger, tol));
    return 0;
  }
  if (kind == "adjoint") {
    emit(canonical_json(maff::quotient_adjoint(t1, tol), tol));
    return 0;
  }
  if (kind == "chi") {
    emit(maff::to_json(maff::characteristic_projection(t1, tol)));
    return 0;
  }
  std::cerr << "unknown op subcommand: " << kind << "\n";
  return 2;
}

int run_krein(const std::string& file, const std::string& witness_file, const Tolerance& tol) {
  const Quotient s = maff::quotient_from_json(maff::parse_file(file), tol);
  std::optional<CMatrix> witness;
  if (!witness_file.empty()) witness = maff::matrix_from_json(maff::parse_file(witness_file));
  const maff::PositiveExtensions ext = maff::positive_extensions(s, witness, tol);
  json out;
  out["krein_vn"] = canonical_json(ext.krein_vn, tol);
  if (ext.friedrichs)
    out["friedrichs"] = canonical_json(*ext.friedrichs, tol);
  else
    out["friedrichs"] = "unbounded";
  out["k_min"] = maff::to_json(ext.bounds.K_min);
  out["k_max"] = maff::to_json(ext.bounds.K_max);
  emit(out);
  return 0;
}

std::vector<int> parse_dims(const std::string& spec) {
  std::vector<int> dims;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    dims.push_back(std::stoi(item));
  }
  return dims;
}

int run_verify(const std::string& suite, uint64_t seed, int cases, const std::string& dims_spec,
               const Tolerance& tol) {
  maff::verify::Config cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  cfg.tol = tol;
  if (!dims_spec.empty()) cfg.dims = parse_dims(dims_spec);

  std::vector<std::string> todo;
  if (suite == "all")
    todo = maff::verify::suite_names();
  else if (maff::verify::is_suite_name(suite))
    todo = {suite};
  else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<maff::verify::SuiteResult> results;
  bool all_passed = true;
  for (const auto& name : todo) {
    results.push_back(maff::verify::run_suite(name, cfg));
    all_passed = all_passed && results.back().passed();
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
  emit(maff::verify::report_to_json(results, cfg, wall));
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quotient-representation operator calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string tol_path;
  app.add_option("--tol", tol_path, "tolerance configuration file (JSON)");

  auto* op_cmd = app.add_subcommand("op", "quotient operations");
  std::string op_kind;
  std::vector<std::string> op_files;
  op_cmd->add_option("kind", op_kind, "sum|product|dagger|adjoint|chi|equals|extends")
      ->required();
  op_cmd->add_option("files", op_files, "operand JSON files");

  auto* krein_cmd = app.add_subcommand("krein", "Krein-von Neumann / Friedrichs extensions");
  std::string krein_file, witness_file;
  krein_cmd->add_option("quotient", krein_file, "positive quotient JSON file")->required();
  krein_cmd->add_option("--witness", witness_file, "PSD extension witness matrix JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run property-verification suites");
  std::string suite = "all";
  uint64_t seed = 42;
  int cases = 0;
  std::string dims_spec;
  std::string suite_help = "suite name or 'all':";
  for (const auto& name : maff::verify::suite_names()) suite_help += " " + name;
  verify_cmd->add_option("--suite", suite, suite_help);
  verify_cmd->add_option("--seed", seed, "base RNG seed");
  verify_cmd->add_option("--cases", cases, "override per-suite case counts (0 = defaults)");
  verify_cmd->add_option("--dims", dims_spec, "comma-separated ambient dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Tolerance tol = resolve_tolerance(tol_path);
    if (*op_cmd) return run_op(op_kind, op_files, tol);
    if (*krein_cmd) return run_krein(krein_file, witness_file, tol);
    if (*verify_cmd) return run_verify(suite, seed, cases, dims_spec, tol);
  } catch (const maff::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
