#include "maffkit/json_io.hpp"

#include <cmath>
#include <fstream>

namespace maff {

json to_json(const CMatrix& m) {
  json data = json::array();
  for (const auto& v : m.data()) data.push_back(json::array({v.real(), v.imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    fail(errc::bad_input, "matrix JSON needs rows, cols, data");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) fail(errc::bad_input, "negative dimension");
  const auto& data = j.at("data");
  if (!data.is_array() || data.size() != static_cast<size_t>(rows) * cols)
    fail(errc::bad_input, "matrix data length must be rows*cols");
  CMatrix m(rows, cols);
  size_t idx = 0;
  for (const auto& entry : data) {
    if (!entry.is_array() || entry.size() != 2)
      fail(errc::bad_input, "matrix entries are [re, im] pairs");
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      fail(errc::bad_input, "non-finite matrix entry");
    m.data()[idx++] = complexd(re, im);
  }
  return m;
}

json to_json(const Quotient& t) { return json{{"A", to_json(t.A)}, {"B", to_json(t.B)}}; }

Quotient quotient_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    fail(errc::bad_input, "quotient JSON needs A and B");
  return quotient_new(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")), tol);
}

json to_json(const RepAlgebra& alg) {
  json blocks = json::array();
  for (const auto& b : alg.blocks) blocks.push_back(json::array({b.n, b.k}));
  return json{{"blocks", std::move(blocks)}};
}

RepAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("blocks")) fail(errc::bad_input, "algebra JSON needs blocks");
  RepAlgebra alg;
  for (const auto& b : j.at("blocks")) {
    if (!b.is_array() || b.size() != 2) fail(errc::bad_input, "blocks are [n, k] pairs");
    alg.blocks.push_back({b[0].get<int>(), b[1].get<int>()});
  }
  alg.validate();
  return alg;
}

json to_json(const Homomorphism& phi) {
  json mult = json::array();
  for (const auto& row : phi.mult) mult.push_back(row);
  json conj = json::array();
  for (const auto& u : phi.conjugators) conj.push_back(to_json(u));
  return json{{"source", to_json(phi.source)},
              {"target", to_json(phi.target)},
              {"mult", std::move(mult)},
              {"conjugators", std::move(conj)}};
}

Homomorphism hom_from_json(const json& j, const RepAlgebra& source, const RepAlgebra& target,
                           const Tolerance& tol) {
  if (!j.is_object() || !j.contains("mult") || !j.contains("conjugators"))
    fail(errc::bad_input, "homomorphism JSON needs mult and conjugators");
  Homomorphism phi;
  phi.source = source;
  phi.target = target;
  for (const auto& row : j.at("mult")) phi.mult.push_back(row.get<std::vector<int>>());
  for (const auto& u : j.at("conjugators")) phi.conjugators.push_back(matrix_from_json(u));
  phi.validate(tol);
  return phi;
}

json to_json(const Tolerance& tol) {
  return json{{"rank_scale", tol.rank_scale}, {"eq_abs", tol.eq_abs}, {"eq_rel", tol.eq_rel}};
}

Tolerance tolerance_from_json(const json& j) {
  Tolerance tol;
  if (j.contains("rank_scale")) tol.rank_scale = j.at("rank_scale").get<double>();
  if (j.contains("eq_abs")) tol.eq_abs = j.at("eq_abs").get<double>();
  if (j.contains("eq_rel")) tol.eq_rel = j.at("eq_rel").get<double>();
  tol.validate();
  return tol;
}

Tolerance load_tolerance_file(const std::string& path) {
  return tolerance_from_json(parse_file(path));
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::bad_input, std::string("JSON parse error: ") + e.what());
  }
  return j;
}

}  // namespace maff
