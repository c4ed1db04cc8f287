#include "pdoc/literal.hpp"

#include "pdoc/errors.hpp"
#include "pdoc/expression.hpp"

namespace pdoc {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& message) { throw ParseError("literal: " + message, 0); }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_error(e.what());
  }
  schema_error("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("literal: malformed JSON: ") + e.what(), e.byte);
  }
}

std::size_t dim_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
    schema_error("\"dim\" must be an integer >= 1");
  }
  return doc["dim"].get<std::size_t>();
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

json scalar_to_json(const GaussianRational& z) { return json::array({to_string(z.re()), to_string(z.im())}); }

GaussianRational scalar_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) schema_error("complex entries are [re, im]");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return GaussianRational(rational_from_json(j));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) schema_error("matrix must have " + std::to_string(dim) + " rows");
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) schema_error("matrix rows must have " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

json laurent_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.coeffs()) terms.push_back({{"m", m}, {"matrix", matrix_to_json(c)}});
  return terms;
}

LaurentPoly laurent_from_json(const json& terms, std::size_t dim) {
  if (!terms.is_array()) schema_error("\"terms\" must be an array");
  LaurentPoly p(dim);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("m") || !t["m"].is_number_integer() || !t.contains("matrix")) {
      schema_error("each term needs an integer \"m\" and a \"matrix\"");
    }
    p.add_term(t["m"].get<long>(), matrix_from_json(t["matrix"], dim));
  }
  return p;
}

LatticeOperator operator_from_literal(const json& doc) {
  const std::size_t dim = dim_of(doc);
  if (doc.contains("expr")) {
    if (!doc["expr"].is_string()) schema_error("\"expr\" must be a string");
    return evaluate_operator(doc["expr"].get<std::string>(), dim);
  }
  if (!doc.contains("terms")) schema_error("operator literal needs \"terms\" or \"expr\"");
  return op_from_laurent(laurent_from_json(doc["terms"], dim));
}

LatticeOperator operator_from_literal(std::string_view text) { return operator_from_literal(parse_document(text)); }

json symbol_to_literal(const FormalSymbol& s) {
  json parts = json::array();
  for (const auto& p : s.parts()) {
    if (p.is_zero()) continue;
    parts.push_back({{"degree", p.degree}, {"plus", laurent_to_json(p.plus)}, {"minus", laurent_to_json(p.minus)}});
  }
  return {{"dim", s.dim()}, {"order", s.order()}, {"depth", s.depth()}, {"parts", parts}};
}

FormalSymbol symbol_from_literal(const json& doc) {
  const std::size_t dim = dim_of(doc);
  if (!doc.contains("order") || !doc["order"].is_number_integer()) schema_error("\"order\" must be an integer");
  std::size_t depth = kDefaultSymbolDepth;
  if (doc.contains("depth")) {
    if (!doc["depth"].is_number_integer() || doc["depth"].get<long>() < 1) schema_error("\"depth\" must be >= 1");
    depth = doc["depth"].get<std::size_t>();
  }
  FormalSymbol s(dim, doc["order"].get<long>(), depth);
  if (doc.contains("parts")) {
    if (!doc["parts"].is_array()) schema_error("\"parts\" must be an array");
    for (const auto& p : doc["parts"]) {
      if (!p.is_object() || !p.contains("degree") || !p["degree"].is_number_integer()) {
        schema_error("each part needs an integer \"degree\"");
      }
      const long degree = p["degree"].get<long>();
      if (!s.stores(degree)) schema_error("part degree " + std::to_string(degree) + " outside order/depth");
      auto& slot = s.part(degree);
      if (p.contains("plus")) slot.plus = laurent_from_json(p["plus"], dim);
      if (p.contains("minus")) slot.minus = laurent_from_json(p["minus"], dim);
    }
  }
  return s;
}

FormalSymbol symbol_from_literal(std::string_view text) { return symbol_from_literal(parse_document(text)); }

}  // namespace pdoc
