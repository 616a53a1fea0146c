#pragma once

#include <string>

#include <json.hpp>

#include "maffkit/kreinext.hpp"
#include "maffkit/quotient.hpp"
#include "maffkit/rep_algebra.hpp"

namespace maff {

using json = nlohmann::json;

// Matrix wire format: {"rows": n, "cols": m, "data": [[re, im], ...]} in
// row-major order. Parsers reject non-finite entries.

json to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json to_json(const Quotient& t);
Quotient quotient_from_json(const json& j, const Tolerance& tol = {});

json to_json(const RepAlgebra& alg);              // {"blocks": [[n, k], ...]}
RepAlgebra algebra_from_json(const json& j);

json to_json(const Homomorphism& phi);            // {"mult": [[..]], "conjugators": [...]}
Homomorphism hom_from_json(const json& j, const RepAlgebra& source, const RepAlgebra& target,
                           const Tolerance& tol = {});

json to_json(const Tolerance& tol);
Tolerance tolerance_from_json(const json& j);
Tolerance load_tolerance_file(const std::string& path);

json parse_file(const std::string& path);

}  // namespace maff
