// Command-line front end: operator/symbol literals in, exact reports out.
// Exit status: 0 success, 1 verification failure, 2 usage, parse or domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdoc/errors.hpp"
#include "pdoc/expression.hpp"
#include "pdoc/literal.hpp"
#include "pdoc/report.hpp"

namespace {

using nlohmann::json;
using namespace pdoc;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::size_t dim = 1;
  std::uint64_t seed = 7;
  std::size_t samples = 100;
  long degree = 4;
  std::size_t depth = kDefaultSymbolDepth;
  unsigned k = 1;
  std::string format = "table";
  std::vector<std::string> defs;
  bool verbose = false;
  bool abs_d = false;
};

json config_json(const std::string& command, const RunConfig& c) {
  return {{"command", command}, {"dim", c.dim},       {"seed", c.seed}, {"samples", c.samples},
          {"degree", c.degree}, {"depth", c.depth},   {"k", c.k},       {"format", c.format}};
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_literal(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && value[first] == '{') return value;
  std::ifstream in(value);
  if (!in) throw UsageError("--def: cannot read '" + value + "' (neither inline JSON nor a readable file)");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Bindings {
  OperatorBindings operators;
  SymbolBindings symbols;
};

Bindings load_bindings(const RunConfig& config) {
  Bindings out;
  for (const auto& def : config.defs) {
    const auto eq = def.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--def expects NAME=literal, got '" + def + "'");
    const auto name = def.substr(0, eq);
    json doc;
    try {
      doc = json::parse(read_literal(def.substr(eq + 1)));
    } catch (const json::parse_error& e) {
      throw ParseError("--def " + name + ": malformed JSON: " + e.what(), e.byte);
    }
    if (doc.is_object() && doc.contains("order")) {
      out.symbols.insert_or_assign(name, symbol_from_literal(doc));
      continue;
    }
    out.operators.insert_or_assign(name, operator_from_literal(doc));
    if (doc.is_object() && doc.contains("terms")) {
      out.symbols.insert_or_assign(name, symbol_of_multiplication(laurent_from_json(doc["terms"], doc["dim"].get<std::size_t>()),
                                                                  config.depth));
    }
  }
  return out;
}

std::vector<LatticeOperator> parse_operators(const std::vector<std::string>& texts, const RunConfig& config,
                                             const Bindings& b) {
  std::vector<LatticeOperator> out;
  for (const auto& t : texts) out.push_back(evaluate_operator(t, config.dim, b.operators));
  return out;
}

int emit(const RunConfig& config, const std::string& command, json results, const std::string& text,
         const std::vector<Assertion>& assertions = {}) {
  const bool ok = all_passed(assertions);
  if (config.format == "structured") {
    json doc{{"config", config_json(command, config)}, {"results", std::move(results)}, {"assertions", to_json(assertions)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text << render(assertions);
  }
  for (const auto& a : assertions) {
    if (!a.passed) std::cerr << "AssertionFailed: " << a.name << " (expected " << a.expected << ", got " << a.actual << ")\n";
  }
  return ok ? kOk : kVerificationFailed;
}

Assertion check(std::string name, const GaussianRational& expected, const GaussianRational& actual) {
  return {std::move(name), to_string(expected), to_string(actual), expected == actual};
}

Assertion check(std::string name, bool holds) { return {std::move(name), "true", holds ? "true" : "false", holds}; }

int cmd_omega(const RunConfig& config, const std::string& a, const std::string& b) {
  const auto bindings = load_bindings(config);
  const auto ops = parse_operators({a, b}, config, bindings);
  const auto omega = curvature(ops[0], ops[1]);
  return emit(config, "omega", operator_to_json(omega), render_operator(omega));
}

int cmd_cocycle(const RunConfig& config, const std::vector<std::string>& operands) {
  if (operands.size() != 2 * config.k) {
    throw UsageError("cocycle --k " + std::to_string(config.k) + " needs " + std::to_string(2 * config.k) +
                     " operands, got " + std::to_string(operands.size()));
  }
  const auto bindings = load_bindings(config);
  const auto ops = parse_operators(operands, config, bindings);
  const auto eval = chern_cocycle_table(config.k, ops);
  return emit(config, "cocycle", to_json(eval, config.verbose), render(eval, config.verbose));
}

int cmd_verify(const RunConfig& config, const std::string& kind) {
  SweepConfig sweep{config.k, config.samples, config.seed, config.degree, config.dim, config.depth, config.abs_d};
  VerificationReport report;
  if (kind == "closedness") {
    report = closedness_sweep(sweep);
  } else if (kind == "bianchi") {
    report = bianchi_sweep(sweep);
  } else if (kind == "residue-trace") {
    report = residue_trace_sweep(sweep);
  } else if (kind == "oracle") {
    report = oracle_sweep(sweep);
  } else {
    report = commutator_trace_sweep(sweep);
  }
  std::vector<Assertion> assertions{{kind, "0 failures", std::to_string(report.failures) + " failures of " +
                                                              std::to_string(report.checks),
                                     report.passed()}};
  return emit(config, "verify " + kind, to_json(report), render(report), assertions);
}

int cmd_repro(const RunConfig& config, const std::string& target) {
  if (target == "four-cocycle") {
    const auto table = four_cocycle_table(-2, 2, -3, 3, config.dim);
    const auto claims = check_four_cocycle_claims(table);
    const GaussianRational two_d(2 * static_cast<long>(config.dim));
    const auto zm2 = op_from_laurent(LaurentPoly::z(-2, config.dim));
    const auto z2 = op_from_laurent(LaurentPoly::z(2, config.dim));
    const auto zm3 = op_from_laurent(LaurentPoly::z(-3, config.dim));
    const auto z3 = op_from_laurent(LaurentPoly::z(3, config.dim));
    std::vector<Assertion> assertions{
        check("tr Omega(z^-2,z^2) Omega(z^-3,z^3) = 2d", two_d, trace(curvature(zm2, z2) * curvature(zm3, z3))),
        check("(n1, n-1) in {0,2}^2 for every permutation", claims.counts_in_zero_two),
        check("eps(s) = 1 implies n-1 = 0", claims.even_rows_have_no_minus),
        check("eps(s) = -1 implies n1 = 0", claims.odd_rows_have_no_plus),
        check("closed-form rows match structural traces", claims.rows_consistent),
        {"tr(Omega^2)(z^-2,z^2,z^-3,z^3) > 0", "> 0", to_string(table.total), claims.total_positive},
    };
    return emit(config, "repro four-cocycle", to_json(table, claims), render(table, claims), assertions);
  }
  if (target == "schwinger") {
    const auto cmp = schwinger_comparison(1, 5, config.dim, config.depth);
    const GaussianRational d(static_cast<long>(config.dim));
    std::vector<Assertion> assertions{
        check("chern(z^-1, z) = d", d, cmp.rows.front().chern),
        check("schwinger(z^-1, z) = -d", -d, cmp.rows.front().schwinger),
        check("chern nonzero and linear in m", cmp.chern_nonzero && cmp.chern_linear_in_m),
        check("schwinger / chern independent of m", cmp.schwinger_over_chern.has_value()),
        check("radul / chern independent of m", cmp.radul_over_chern.has_value()),
        check("renormalized bracket / operator trace independent of m", cmp.bracket_over_theta.has_value()),
    };
    return emit(config, "repro schwinger", to_json(cmp), render(cmp), assertions);
  }
  if (target == "case-table") {
    const auto report = case_table_sweep(6);
    std::vector<Assertion> assertions{{"classifier = structural = dense window on [-6,6]^3", "0 failures",
                                       std::to_string(report.failures) + " failures of " + std::to_string(report.checks),
                                       report.passed()}};
    return emit(config, "repro case-table", to_json(report), render(report), assertions);
  }
  const auto report = off_diagonal_trace_sweep(3);
  std::vector<Assertion> assertions{{"tr Omega Omega = d(n1 - n-1) on [-3,3]^4, 0 off the zero-sum locus",
                                     "0 failures",
                                     std::to_string(report.failures) + " failures of " + std::to_string(report.checks),
                                     report.passed()}};
  return emit(config, "repro off-diagonal", to_json(report), render(report), assertions);
}

int cmd_witness(const RunConfig& config, long radius) {
  std::vector<LatticeOperator> family;
  std::vector<long> modes;
  for (long m = -radius; m <= radius; ++m) {
    family.push_back(op_from_laurent(LaurentPoly::z(m, config.dim)));
    modes.push_back(m);
  }
  const auto witness = nonvanishing_witness(chern_cochain(config.k), family);
  json results{{"k", config.k}, {"radius", radius}, {"found", witness.has_value()}};
  std::string text = "tr(Omega^" + std::to_string(config.k) + ") on {z^m : |m| <= " + std::to_string(radius) + "}: ";
  if (witness) {
    json tuple = json::array();
    text += "nonzero at (";
    for (std::size_t i = 0; i < witness->indices.size(); ++i) {
      tuple.push_back(modes[witness->indices[i]]);
      text += (i ? ", " : "") + std::string("z^") + std::to_string(modes[witness->indices[i]]);
    }
    text += ") with value " + to_string(witness->value) + "\n";
    results["modes"] = tuple;
    results["value"] = scalar_to_json(witness->value);
  } else {
    text += "vanishes on every tuple\n";
  }
  return emit(config, "witness", results, text, {check("witness found", witness.has_value())});
}

int cmd_residue(const RunConfig& config, const std::string& symbol) {
  const auto bindings = load_bindings(config);
  const auto s = evaluate_symbol(symbol, config.dim, config.depth, bindings.symbols);
  const auto value = wodzicki_residue(s);
  return emit(config, "residue", {{"symbol", symbol_to_literal(s)}, {"residue", scalar_to_json(value)}},
              to_string(s) + "residue " + to_string(value) + "\n");
}

int cmd_radul(const RunConfig& config, const std::string& x, const std::string& y) {
  const auto bindings = load_bindings(config);
  const auto sx = evaluate_symbol(x, config.dim, config.depth, bindings.symbols);
  const auto sy = evaluate_symbol(y, config.dim, config.depth, bindings.symbols);
  const auto raw = radul_residue(sx, sy, config.depth);
  const auto value = radul_cocycle(sx, sy, config.depth);
  return emit(config, "radul",
              {{"residue", scalar_to_json(raw)}, {"kappa", scalar_to_json(radul_normalization())},
               {"value", scalar_to_json(value)}},
              "residue " + to_string(raw) + "\nkappa " + to_string(radul_normalization()) + "\nvalue " +
                  to_string(value) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chern-Weil cocycles on lattice operators and formal symbols over the circle"};
  app.require_subcommand(1);
  RunConfig config;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", config.dim, "Fibre dimension d")->check(CLI::PositiveNumber);
    sub->add_option("--depth", config.depth, "Symbol truncation depth")->check(CLI::Range(2, 64));
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--def", config.defs, "Bind NAME=literal (inline JSON or a file path)");
  };

  std::string omega_a, omega_b;
  auto* omega = app.add_subcommand("omega", "Curvature Omega(a, b) of two operator expressions");
  omega->add_option("a", omega_a)->required();
  omega->add_option("b", omega_b)->required();
  add_common(omega);

  std::vector<std::string> cocycle_ops;
  auto* cocycle = app.add_subcommand("cocycle", "tr(Omega^k) on 2k operator expressions");
  cocycle->add_option("--k", config.k, "Degree k")->check(CLI::Range(1, 4));
  cocycle->add_flag("--verbose", config.verbose, "Print the permutation table");
  cocycle->add_option("operands", cocycle_ops)->required();
  add_common(cocycle);

  std::string verify_kind;
  auto* verify = app.add_subcommand("verify", "Randomized exact verification sweeps");
  verify->add_option("kind", verify_kind)
      ->required()
      ->check(CLI::IsMember({"closedness", "bianchi", "residue-trace", "oracle", "commutator-trace"}));
  verify->add_option("--k", config.k, "Cocycle degree for closedness")->check(CLI::Range(1, 3));
  verify->add_option("--seed", config.seed, "Random seed");
  verify->add_option("--samples", config.samples, "Number of random samples")->check(CLI::PositiveNumber);
  verify->add_option("--degree", config.degree, "Fourier degree bound")->check(CLI::Range(0, 64));
  verify->add_flag("--abs-d", config.abs_d, "Include |D| in the sampled span");
  add_common(verify);

  std::string repro_target;
  auto* repro = app.add_subcommand("repro", "Run the fixed finite computations");
  repro->add_option("target", repro_target)
      ->required()
      ->check(CLI::IsMember({"four-cocycle", "schwinger", "case-table", "off-diagonal"}));
  add_common(repro);

  long witness_radius = 3;
  auto* witness = app.add_subcommand("witness", "Search {z^m : |m| <= r} for a nonvanishing tuple of tr(Omega^k)");
  witness->add_option("--k", config.k, "Degree k")->check(CLI::Range(1, 3));
  witness->add_option("--radius", witness_radius, "Mode bound r")->check(CLI::Range(1, 10));
  add_common(witness);

  std::string residue_symbol;
  auto* residue = app.add_subcommand("residue", "Wodzicki residue of a symbol expression");
  residue->add_option("symbol", residue_symbol)->required();
  add_common(residue);

  std::string radul_x, radul_y;
  auto* radul = app.add_subcommand("radul", "Calibrated residue cocycle of two symbol expressions");
  radul->add_option("x", radul_x)->required();
  radul->add_option("y", radul_y)->required();
  add_common(radul);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*omega) return cmd_omega(config, omega_a, omega_b);
    if (*cocycle) return cmd_cocycle(config, cocycle_ops);
    if (*verify) return cmd_verify(config, verify_kind);
    if (*repro) return cmd_repro(config, repro_target);
    if (*witness) return cmd_witness(config, witness_radius);
    if (*residue) return cmd_residue(config, residue_symbol);
    return cmd_radul(config, radul_x, radul_y);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
