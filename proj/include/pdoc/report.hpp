#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pdoc/cocycles.hpp"
#include "pdoc/repro.hpp"

namespace pdoc {

// Structured output uses "p/q" strings for rationals and [re, im] pairs for scalars.
// Text output uses the short scalar form ("3", "-1/2+i").

struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

nlohmann::json to_json(const Assertion& a);
nlohmann::json to_json(const std::vector<Assertion>& list);
std::string render(const std::vector<Assertion>& list);
bool all_passed(const std::vector<Assertion>& list);

std::string to_string(const IndexPoly& p);
std::string to_string(const LaurentPoly& p);
std::string to_string(const FormalSymbol& s);

/// Finite-rank operators: support intervals, exact rank and nonzero entries.
/// Others: one record per generalized diagonal with its tail polynomials and window.
nlohmann::json operator_to_json(const LatticeOperator& a);
std::string render_operator(const LatticeOperator& a);

nlohmann::json to_json(const ChernEvaluation& e, bool with_terms);
std::string render(const ChernEvaluation& e, bool with_terms);

nlohmann::json to_json(const VerificationReport& r);
std::string render(const VerificationReport& r);

nlohmann::json to_json(const FourCocycleTable& t, const FourCocycleClaims& c);
std::string render(const FourCocycleTable& t, const FourCocycleClaims& c);

nlohmann::json to_json(const SchwingerComparison& s);
std::string render(const SchwingerComparison& s);

}  // namespace pdoc
