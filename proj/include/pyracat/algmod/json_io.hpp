#pragma once

#include <json.hpp>

#include "pyracat/algmod/modules.hpp"

namespace pyracat {

/// {"name", "dim", "basis", "unit", "mul": [[i, j, k, "p/q"]...],
///  "idempotents": [[...]...], "char": 0}. Indices are 0-based basis
/// positions. Throws std::invalid_argument on malformed input or a nonzero
/// characteristic. Validity of the algebra is not checked here.
Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);

/// {"dim", "left": [matrix per basis element], "right": [...]}.
nlohmann::json bimodule_to_json(const Bimodule& m);
Bimodule bimodule_from_json(const nlohmann::json& j, std::size_t algebra_dim);

}  // namespace pyracat
