// Acceptance criteria AC1-AC10: one PASS/FAIL line each. Exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pdoc/cocycles.hpp"
#include "pdoc/forms.hpp"
#include "pdoc/repro.hpp"

using namespace pdoc;

namespace {

LatticeOperator z(long m, std::size_t d = 1) { return op_from_laurent(LaurentPoly::z(m, d)); }

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string counts(const VerificationReport& r) {
  return std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures";
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = case_table_sweep(6);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2f s", secs);
  return {r.passed() && secs < 10.0, counts(r) + buf};
}

Outcome ac2() {
  bool ok = true;
  std::string detail;
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto v = trace(curvature(z(-2, d), z(2, d)) * curvature(z(-3, d), z(3, d)));
    ok = ok && v == GaussianRational(2 * static_cast<long>(d));
    detail += (d > 1 ? ", " : "") + std::string("d=") + std::to_string(d) + ": " + to_string(v);
  }
  return {ok, detail};
}

Outcome ac3() {
  const auto table = four_cocycle_table(-2, 2, -3, 3);
  const auto c = check_four_cocycle_claims(table);
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string detail = std::string("counts in {0,2}^2: ") + yn(c.counts_in_zero_two) +
                       ", even => n-1=0: " + yn(c.even_rows_have_no_minus) +
                       ", odd => n1=0: " + yn(c.odd_rows_have_no_plus) + ", tr Omega^2 = " + to_string(table.total);
  const bool ok = c.counts_in_zero_two && c.even_rows_have_no_minus && c.odd_rows_have_no_plus && c.total_positive;
  return {ok, detail};
}

Outcome ac4() {
  const auto r = off_diagonal_trace_sweep(3);
  return {r.passed(), counts(r)};
}

Outcome ac5() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t triples = 0;
  std::size_t quintuples = 0;
  std::size_t failures = 0;
  for (std::size_t d = 1; d <= 2; ++d) {
    SweepConfig k1;
    k1.k = 1;
    k1.samples = 60;
    k1.dim = d;
    k1.seed = 100 + d;
    const auto r1 = closedness_sweep(k1);
    triples += r1.checks;
    failures += r1.failures;
    SweepConfig k2 = k1;
    k2.k = 2;
    k2.samples = 25;
    k2.seed = 200 + d;
    k2.include_abs_d = false;
    const auto r2 = closedness_sweep(k2);
    quintuples += r2.checks;
    failures += r2.failures;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu triples, %zu 5-tuples, %zu failures, %.2f s", triples, quintuples, failures, secs);
  return {failures == 0 && triples >= 100 && quintuples >= 25 && secs < 300.0, buf};
}

Outcome ac6() {
  SweepConfig cfg;
  cfg.samples = 60;
  cfg.seed = 11;
  const auto r = bianchi_sweep(cfg);
  return {r.passed() && r.checks >= 50, counts(r)};
}

Outcome ac7() {
  SweepConfig cfg;
  cfg.samples = 60;
  cfg.seed = 13;
  cfg.depth = 6;
  const auto r = residue_trace_sweep(cfg);
  return {r.passed() && r.checks >= 50, counts(r)};
}

Outcome ac8() {
  SweepConfig cfg;
  cfg.samples = 60;
  cfg.seed = 17;
  const auto r = commutator_trace_sweep(cfg);
  return {r.passed() && r.checks >= 50, counts(r)};
}

Outcome ac9() {
  const auto c = schwinger_comparison(1, 5);
  std::string detail = "chern(z^-1,z) = " + to_string(c.rows.front().chern);
  if (c.schwinger_over_chern) detail += ", schwinger/chern = " + to_string(*c.schwinger_over_chern);
  if (c.radul_over_chern) detail += ", radul/chern = " + to_string(*c.radul_over_chern);
  return {c.proportional(), detail};
}

Outcome ac10() {
  std::vector<LatticeOperator> family;
  std::vector<long> modes;
  for (long m = -3; m <= 3; ++m) {
    family.push_back(z(m));
    modes.push_back(m);
  }
  std::string detail;
  bool ok = true;
  for (unsigned k = 1; k <= 2; ++k) {
    const auto w = nonvanishing_witness(chern_cochain(k), family);
    detail += (k > 1 ? "; " : "") + std::string("k=") + std::to_string(k) + ": ";
    if (w) {
      detail += "(";
      for (std::size_t i = 0; i < w->indices.size(); ++i) detail += (i ? "," : "") + std::to_string(modes[w->indices[i]]);
      detail += ") -> " + to_string(w->value);
    } else {
      detail += "none";
      ok = false;
    }
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 case table", ac1},          {"AC2 single trace 2d", ac2},   {"AC3 four-cocycle claims", ac3},
      {"AC4 off-diagonal traces", ac4}, {"AC5 closedness", ac5},        {"AC6 Bianchi", ac6},
      {"AC7 residue traciality", ac7},  {"AC8 commutator trace", ac8},  {"AC9 k=1 proportionality", ac9},
      {"AC10 nonvanishing witness", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
