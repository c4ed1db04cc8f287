#include "pdoc/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "pdoc/literal.hpp"

namespace pdoc {

using nlohmann::json;

namespace {

struct Entry {
  long target;
  long source;
  Matrix value;
};

std::vector<Entry> finite_entries(const LatticeOperator& a) {
  std::vector<Entry> out;
  for (const auto& [offset, profile] : a.diagonals()) {
    for (const auto& [k, m] : profile.window()) out.push_back({k + offset, k, m});
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& x, const Entry& y) { return std::tie(x.target, x.source) < std::tie(y.target, y.source); });
  return out;
}

std::string interval_text(const ModeInterval& i) {
  if (i.empty()) return "empty";
  return "[" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + "]";
}

json interval_json(const ModeInterval& i) {
  if (i.empty()) return nullptr;
  return json::array({i.lo, i.hi});
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string optional_text(const std::optional<GaussianRational>& v) { return v ? to_string(*v) : "not constant"; }

json optional_json(const std::optional<GaussianRational>& v) { return v ? scalar_to_json(*v) : json(nullptr); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

json to_json(const Assertion& a) {
  return {{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"passed", a.passed}};
}

json to_json(const std::vector<Assertion>& list) {
  json out = json::array();
  for (const auto& a : list) out.push_back(to_json(a));
  return out;
}

std::string render(const std::vector<Assertion>& list) {
  std::string out;
  for (const auto& a : list) {
    out += std::string(a.passed ? "PASS " : "FAIL ") + a.name + ": expected " + a.expected + ", got " + a.actual + "\n";
  }
  return out;
}

bool all_passed(const std::vector<Assertion>& list) {
  return std::all_of(list.begin(), list.end(), [](const Assertion& a) { return a.passed; });
}

std::string to_string(const IndexPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
    const auto& c = p.coeffs()[e];
    if (c.is_zero()) continue;
    out += out.empty() ? "" : " + ";
    out += "(" + to_string(c) + ")";
    if (e == 1) out += "*k";
    if (e > 1) out += "*k^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.coeffs()) {
    out += out.empty() ? "" : " + ";
    out += "(" + to_string(c) + ")*z^" + std::to_string(m);
  }
  return out;
}

std::string to_string(const FormalSymbol& s) {
  std::string out = "symbol order " + std::to_string(s.order()) + ", depth " + std::to_string(s.depth()) + "\n";
  for (const auto& part : s.parts()) {
    if (part.is_zero()) continue;
    out += "  degree " + std::to_string(part.degree) + ": xi>0 " + to_string(part.plus) + " | xi<0 " +
           to_string(part.minus) + "\n";
  }
  if (s.is_zero()) out += "  (zero to this depth)\n";
  return out;
}

json operator_to_json(const LatticeOperator& a) {
  json out{{"dim", a.dim()}};
  if (const auto support = finite_rank_support(a)) {
    out["finite_rank"] = true;
    out["source_modes"] = interval_json(support->source);
    out["target_modes"] = interval_json(support->target);
    out["rank"] = *exact_rank(a);
    json entries = json::array();
    for (const auto& e : finite_entries(a)) {
      entries.push_back({{"target", e.target}, {"source", e.source}, {"matrix", matrix_to_json(e.value)}});
    }
    out["entries"] = entries;
    return out;
  }
  out["finite_rank"] = false;
  json diagonals = json::array();
  for (const auto& [offset, profile] : a.diagonals()) {
    json window = json::array();
    for (const auto& [k, m] : profile.window()) window.push_back({{"source", k}, {"matrix", matrix_to_json(m)}});
    diagonals.push_back({{"offset", offset},
                         {"left", to_string(profile.left())},
                         {"right", to_string(profile.right())},
                         {"left_bound", profile.left_bound()},
                         {"right_bound", profile.right_bound()},
                         {"window", window}});
  }
  out["diagonals"] = diagonals;
  return out;
}

std::string render_operator(const LatticeOperator& a) {
  std::ostringstream out;
  if (const auto support = finite_rank_support(a)) {
    if (a.is_zero()) return "zero operator\n";
    out << "finite rank: source modes " << interval_text(support->source) << ", target modes "
        << interval_text(support->target) << ", rank " << *exact_rank(a) << "\n";
    for (const auto& e : finite_entries(a)) {
      out << "  e_" << e.source << " -> e_" << e.target << " : " << to_string(e.value) << "\n";
    }
    return out.str();
  }
  out << "not finite rank\n";
  for (const auto& [offset, profile] : a.diagonals()) {
    out << "  diagonal " << offset << ": k <= " << profile.left_bound() << " -> " << to_string(profile.left())
        << "; k >= " << profile.right_bound() << " -> " << to_string(profile.right());
    for (const auto& [k, m] : profile.window()) out << "; k = " << k << " -> " << to_string(m);
    out << "\n";
  }
  return out.str();
}

json to_json(const ChernEvaluation& e, bool with_terms) {
  json out{{"value", scalar_to_json(e.value)}};
  if (with_terms) {
    json terms = json::array();
    for (const auto& t : e.terms) {
      terms.push_back({{"permutation", t.permutation}, {"sign", t.sign}, {"trace", scalar_to_json(t.trace)}});
    }
    out["terms"] = terms;
  }
  return out;
}

std::string render(const ChernEvaluation& e, bool with_terms) {
  std::string out;
  if (with_terms) {
    out += "permutation  sign  trace\n";
    for (const auto& t : e.terms) {
      std::string perm;
      for (auto i : t.permutation) perm += std::to_string(i);
      out += pad(perm, 11) + "  " + pad(t.sign > 0 ? "+1" : "-1", 4) + "  " + to_string(t.trace) + "\n";
    }
  }
  return out + "value " + to_string(e.value) + "\n";
}

json to_json(const VerificationReport& r) {
  return {{"kind", r.kind},
          {"checks", r.checks},
          {"failures", r.failures},
          {"passed", r.passed()},
          {"counterexamples", r.counterexamples},
          {"diagnostics", r.diagnostics}};
}

std::string render(const VerificationReport& r) {
  std::string out = r.kind + ": " + (r.passed() ? "PASS" : "FAIL") + " (" + std::to_string(r.checks) + " checks, " +
                    std::to_string(r.failures) + " failures)\n";
  for (const auto& c : r.counterexamples) out += "  counterexample: " + c + "\n";
  for (const auto& d : r.diagnostics) out += "  note: " + d + "\n";
  return out;
}

json to_json(const FourCocycleTable& t, const FourCocycleClaims& c) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"permutation", r.permutation},
                    {"modes", r.modes},
                    {"sign", r.sign},
                    {"n1", r.counts.n1},
                    {"n_minus1", r.counts.n_minus1},
                    {"trace_contribution", scalar_to_json(r.trace_contribution)},
                    {"structural_trace", scalar_to_json(r.structural_trace)}});
  }
  return {{"modes", t.modes},
          {"dim", t.dim},
          {"rows", rows},
          {"total", scalar_to_json(t.total)},
          {"structural_total", scalar_to_json(t.structural_total)},
          {"claims",
           {{"counts_in_zero_two", c.counts_in_zero_two},
            {"even_rows_have_no_minus", c.even_rows_have_no_minus},
            {"odd_rows_have_no_plus", c.odd_rows_have_no_plus},
            {"identity_row_trace_is_2d", c.identity_row_trace_is_2d},
            {"total_positive", c.total_positive},
            {"rows_consistent", c.rows_consistent}}}};
}

std::string render(const FourCocycleTable& t, const FourCocycleClaims& c) {
  std::string out = "tr Omega^2 at (" + std::to_string(t.modes[0]) + ", " + std::to_string(t.modes[1]) + ", " +
                    std::to_string(t.modes[2]) + ", " + std::to_string(t.modes[3]) + "), d = " + std::to_string(t.dim) +
                    "\n";
  out += "  perm            modes  sign  n1  n-1  d(n1-n-1)  structural\n";
  for (const auto& r : t.rows) {
    std::string perm, modes;
    for (auto i : r.permutation) perm += std::to_string(i);
    for (std::size_t i = 0; i < 4; ++i) modes += (i ? "," : "") + std::to_string(r.modes[i]);
    out += "  " + pad(perm, 4) + pad(modes, 17) + pad(r.sign > 0 ? "+1" : "-1", 6) + pad(std::to_string(r.counts.n1), 4) +
           pad(std::to_string(r.counts.n_minus1), 5) + pad(to_string(r.trace_contribution), 11) +
           pad(to_string(r.structural_trace), 12) + "\n";
  }
  out += "total (closed form) " + to_string(t.total) + "\n";
  out += "total (structural)  " + to_string(t.structural_total) + "\n";
  out += "counts in {0,2}^2: " + yes_no(c.counts_in_zero_two) + "\n";
  out += "even rows have n-1 = 0: " + yes_no(c.even_rows_have_no_minus) + "\n";
  out += "odd rows have n1 = 0: " + yes_no(c.odd_rows_have_no_plus) + "\n";
  out += "identity row trace = 2d: " + yes_no(c.identity_row_trace_is_2d) + "\n";
  out += "total > 0: " + yes_no(c.total_positive) + "\n";
  out += "closed form matches structure: " + yes_no(c.rows_consistent) + "\n";
  return out;
}

json to_json(const SchwingerComparison& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"m", r.m},
                    {"chern", scalar_to_json(r.chern)},
                    {"schwinger", scalar_to_json(r.schwinger)},
                    {"radul", scalar_to_json(r.radul)},
                    {"radul_raw", scalar_to_json(r.radul_raw)},
                    {"bracket_trace", scalar_to_json(r.bracket_trace)},
                    {"theta_commutator_trace", scalar_to_json(r.theta_commutator_trace)}});
  }
  return {{"dim", s.dim},
          {"rows", rows},
          {"schwinger_over_chern", optional_json(s.schwinger_over_chern)},
          {"radul_over_chern", optional_json(s.radul_over_chern)},
          {"bracket_over_theta", optional_json(s.bracket_over_theta)},
          {"radul_normalization", scalar_to_json(radul_normalization())},
          {"chern_nonzero", s.chern_nonzero},
          {"chern_linear_in_m", s.chern_linear_in_m},
          {"proportional", s.proportional()}};
}

std::string render(const SchwingerComparison& s) {
  std::string out = "k = 1 comparison on z^-m, z^m, d = " + std::to_string(s.dim) + "\n";
  out += "   m   chern  schwinger   radul  residue  tr^D[p+,p+]  tr[th,th]\n";
  for (const auto& r : s.rows) {
    out += pad(std::to_string(r.m), 4) + pad(to_string(r.chern), 8) + pad(to_string(r.schwinger), 11) +
           pad(to_string(r.radul), 8) + pad(to_string(r.radul_raw), 9) + pad(to_string(r.bracket_trace), 13) +
           pad(to_string(r.theta_commutator_trace), 11) + "\n";
  }
  out += "schwinger / chern: " + optional_text(s.schwinger_over_chern) + "\n";
  out += "radul / chern: " + optional_text(s.radul_over_chern) + " (kappa = " + to_string(radul_normalization()) + ")\n";
  out += "renormalized bracket / operator trace: " + optional_text(s.bracket_over_theta) + "\n";
  out += "chern nonzero: " + yes_no(s.chern_nonzero) + ", linear in m: " + yes_no(s.chern_linear_in_m) + "\n";
  return out;
}

}  // namespace pdoc
