#pragma once

#include <string_view>

#include "json.hpp"
#include "pdoc/lattice_operator.hpp"
#include "pdoc/symbols.hpp"

namespace pdoc {

// Operator literal:
//   {"dim": d, "terms": [{"m": <int>, "matrix": [[<entry>, ...], ...]}, ...]}
// or {"dim": d, "expr": "<operator expression>"}.
// Symbol literal:
//   {"dim": d, "order": o, "depth": N,
//    "parts": [{"degree": j, "plus": [<term>...], "minus": [<term>...]}, ...]}
// An <entry> is ["p/q", "p/q"] (real, imaginary), a "p/q" string, or an integer.

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t dim);

nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& terms, std::size_t dim);

/// Throws ParseError (position 0) on schema violations.
LatticeOperator operator_from_literal(const nlohmann::json& doc);
LatticeOperator operator_from_literal(std::string_view text);

nlohmann::json symbol_to_literal(const FormalSymbol& s);
FormalSymbol symbol_from_literal(const nlohmann::json& doc);
FormalSymbol symbol_from_literal(std::string_view text);

}  // namespace pdoc
