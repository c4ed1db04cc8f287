#include "pdoc/repro.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "pdoc/errors.hpp"
#include "pdoc/random.hpp"

namespace pdoc {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

LatticeOperator z_op(long m, std::size_t dim) { return op_from_laurent(LaurentPoly::z(m, dim)); }

// Modes k with Omega(z^m, z^n) e_k = sign * e_{k+m+n}.
ModeInterval case_interval(long m, long n, int sign) {
  if (sign > 0) return {std::max(1L, 1 - n), -m};
  return {std::max(1L, 1 - m), -n};
}

ModeInterval intersect(ModeInterval a, ModeInterval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

ModeInterval shifted(ModeInterval a, long by) { return {a.lo + by, a.hi + by}; }

std::string tuple_text(const std::vector<Sample>& samples) {
  std::string out = "(";
  for (std::size_t i = 0; i < samples.size(); ++i) out += (i ? ", " : "") + samples[i].expr;
  return out + ")";
}

std::vector<LatticeOperator> ops_of(const std::vector<Sample>& samples) {
  std::vector<LatticeOperator> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.op);
  return out;
}

void record(VerificationReport& report, bool ok, const std::function<std::string()>& describe) {
  ++report.checks;
  if (ok) return;
  ++report.failures;
  if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back(describe());
}

std::optional<GaussianRational> constant_ratio(const std::vector<GaussianRational>& num,
                                               const std::vector<GaussianRational>& den) {
  std::optional<GaussianRational> ratio;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (den[i].is_zero()) return std::nullopt;
    const auto r = num[i] / den[i];
    if (ratio && !(*ratio == r)) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

}  // namespace

CaseVerdict omega_case_classifier(long m, long n, long k) {
  if (k <= 0) return {};
  const bool m_out = m + k <= 0;
  const bool n_out = n + k <= 0;
  if (m_out == n_out) return {};
  return {m_out ? 1 : -1, k + m + n};
}

SignCounts count_signs_closed_form(long m, long n, long p, long q) {
  SignCounts out;
  for (int inner : {1, -1}) {
    for (int outer : {1, -1}) {
      const auto modes = intersect(case_interval(p, q, inner), shifted(case_interval(m, n, outer), -(p + q)));
      if (inner * outer > 0) {
        out.n1 += modes.size();
      } else {
        out.n_minus1 += modes.size();
      }
    }
  }
  return out;
}

SignCounts count_signs_enumerated(long m, long n, long p, long q) {
  const long bound = 2 * (std::labs(m) + std::labs(n) + std::labs(p) + std::labs(q)) + 1;
  SignCounts out;
  for (long k = -bound; k <= bound; ++k) {
    const auto first = omega_case_classifier(p, q, k);
    if (first.sign == 0) continue;
    const auto second = omega_case_classifier(m, n, *first.mode);
    const int sign = first.sign * second.sign;
    if (sign > 0) ++out.n1;
    if (sign < 0) ++out.n_minus1;
  }
  return out;
}

SignCounts count_signs(long m, long n, long p, long q) {
  const auto closed = count_signs_closed_form(m, n, p, q);
  const auto enumerated = count_signs_enumerated(m, n, p, q);
  if (!(closed == enumerated)) {
    throw InternalMismatch("count_signs(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) +
                           "," + std::to_string(q) + "): closed form (" + std::to_string(closed.n1) + "," +
                           std::to_string(closed.n_minus1) + ") vs enumeration (" + std::to_string(enumerated.n1) +
                           "," + std::to_string(enumerated.n_minus1) + ")");
  }
  return closed;
}

FourCocycleTable four_cocycle_table(long m, long n, long p, long q, std::size_t dim) {
  FourCocycleTable table;
  table.modes = {m, n, p, q};
  table.dim = dim;
  std::vector<LatticeOperator> args;
  for (long x : table.modes) args.push_back(z_op(x, dim));
  const auto structural = chern_cocycle_table(2, args);
  table.structural_total = structural.value;

  const GaussianRational d(static_cast<long>(dim));
  GaussianRational sum;
  for (const auto& term : structural.terms) {
    PermutationReport row;
    for (std::size_t i = 0; i < 4; ++i) {
      row.permutation[i] = term.permutation[i];
      row.modes[i] = table.modes[term.permutation[i]];
    }
    row.sign = term.sign;
    row.counts = count_signs(row.modes[0], row.modes[1], row.modes[2], row.modes[3]);
    if (row.modes[0] + row.modes[1] + row.modes[2] + row.modes[3] == 0) {
      row.trace_contribution = d * GaussianRational(row.counts.n1 - row.counts.n_minus1);
    }
    row.structural_trace = term.trace;
    if (row.sign > 0) {
      sum += row.trace_contribution;
    } else {
      sum -= row.trace_contribution;
    }
    table.rows.push_back(row);
  }
  table.total = sum / GaussianRational(24);
  return table;
}

bool is_positive(const GaussianRational& z) { return z.is_real() && sgn(z.re()) > 0; }

FourCocycleClaims check_four_cocycle_claims(const FourCocycleTable& table) {
  FourCocycleClaims claims;
  claims.counts_in_zero_two = true;
  claims.even_rows_have_no_minus = true;
  claims.odd_rows_have_no_plus = true;
  claims.rows_consistent = table.total == table.structural_total;
  const auto in_zero_two = [](long c) { return c == 0 || c == 2; };
  for (const auto& row : table.rows) {
    if (!in_zero_two(row.counts.n1) || !in_zero_two(row.counts.n_minus1)) claims.counts_in_zero_two = false;
    if (row.sign > 0 && row.counts.n_minus1 != 0) claims.even_rows_have_no_minus = false;
    if (row.sign < 0 && row.counts.n1 != 0) claims.odd_rows_have_no_plus = false;
    if (!(row.trace_contribution == row.structural_trace)) claims.rows_consistent = false;
    if (row.permutation == std::array<std::size_t, 4>{0, 1, 2, 3}) {
      claims.identity_row_trace_is_2d =
          row.trace_contribution == GaussianRational(2 * static_cast<long>(table.dim));
    }
  }
  claims.total_positive = is_positive(table.total);
  return claims;
}

SchwingerComparison schwinger_comparison(long m_first, long m_last, std::size_t dim, std::size_t depth) {
  SchwingerComparison out;
  out.dim = dim;
  std::vector<GaussianRational> chern, schwinger, radul, bracket, theta_trace;
  for (long m = m_first; m <= m_last; ++m) {
    ComparisonRow row;
    row.m = m;
    const std::vector<LatticeOperator> args{z_op(-m, dim), z_op(m, dim)};
    row.chern = chern_cocycle(1, args);
    row.schwinger = schwinger_cocycle(args[0], args[1]);
    const auto x = symbol_of_multiplication(LaurentPoly::z(-m, dim), depth);
    const auto y = symbol_of_multiplication(LaurentPoly::z(m, dim), depth);
    row.radul_raw = radul_residue(x, y, depth);
    row.radul = radul_cocycle(x, y, radul_normalization(), depth);
    row.bracket_trace = renormalized_bracket_trace(symbol_p_plus(x), symbol_p_plus(y), depth);
    row.theta_commutator_trace = trace(commutator(theta(args[0]), theta(args[1])));
    chern.push_back(row.chern);
    schwinger.push_back(row.schwinger);
    radul.push_back(row.radul);
    bracket.push_back(row.bracket_trace);
    theta_trace.push_back(row.theta_commutator_trace);
    out.rows.push_back(std::move(row));
  }
  if (out.rows.empty()) return out;
  out.chern_nonzero = std::none_of(chern.begin(), chern.end(), [](const auto& c) { return c.is_zero(); });
  out.chern_linear_in_m = true;
  const auto slope = chern.front() / GaussianRational(out.rows.front().m);
  for (const auto& row : out.rows) {
    if (!(row.chern == slope * GaussianRational(row.m))) out.chern_linear_in_m = false;
  }
  out.schwinger_over_chern = constant_ratio(schwinger, chern);
  out.radul_over_chern = constant_ratio(radul, chern);
  out.bracket_over_theta = constant_ratio(bracket, theta_trace);
  return out;
}

GaussianRational calibrate_radul_normalization(std::size_t depth) {
  const std::vector<LatticeOperator> args{z_op(-1, 1), z_op(1, 1)};
  const auto residue = radul_residue(symbol_of_multiplication(LaurentPoly::z(-1, 1), depth),
                                     symbol_of_multiplication(LaurentPoly::z(1, 1), depth), depth);
  return chern_cocycle(1, args) / residue;
}

VerificationReport closedness_sweep(const SweepConfig& config) {
  VerificationReport report;
  report.kind = "closedness";
  Rng rng(config.seed);
  const auto c = chern_cochain(config.k);
  std::size_t hochschild_nonzero = 0;
  std::size_t cancelling = 0;
  for (std::size_t s = 0; s < config.samples; ++s) {
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < 2 * config.k + 1; ++i) {
      samples.push_back(random_sweep_element(rng, config.dim, config.degree, config.include_abs_d));
    }
    const auto args = ops_of(samples);
    const auto value = ce_coboundary(c, args);
    record(report, value.is_zero(),
           [&] { return "d tr(Omega^" + std::to_string(config.k) + ")" + tuple_text(samples) + " = " + to_string(value); });
    if (!hochschild_coboundary(c, args).is_zero()) ++hochschild_nonzero;
    bool any_term = false;
    for (std::size_t i = 0; i < args.size() && !any_term; ++i) {
      for (std::size_t j = i + 1; j < args.size() && !any_term; ++j) any_term = !c(bracket_and_omit(args, i, j)).is_zero();
    }
    if (any_term) ++cancelling;
  }
  report.diagnostics.push_back("coboundary has a nonzero individual term on " + std::to_string(cancelling) + " of " +
                               std::to_string(config.samples) + " samples");
  report.diagnostics.push_back("hochschild coboundary nonzero on " + std::to_string(hochschild_nonzero) + " of " +
                               std::to_string(config.samples) + " samples (not asserted)");
  return report;
}

VerificationReport bianchi_sweep(const SweepConfig& config) {
  VerificationReport report;
  report.kind = "bianchi";
  Rng rng(config.seed);
  const auto th = theta_form();
  const auto om = curvature_form();
  const auto structure = form_add(form_differential(th), form_wedge(th, th));
  const auto bianchi = form_add(form_differential(om), form_subtract(form_wedge(th, om), form_wedge(om, th)));
  for (std::size_t s = 0; s < config.samples; ++s) {
    std::vector<Sample> samples;
    for (int i = 0; i < 3; ++i) {
      samples.push_back(random_sweep_element(rng, config.dim, config.degree, config.include_abs_d));
    }
    const auto args = ops_of(samples);
    const std::vector<LatticeOperator> pair{args[0], args[1]};
    const auto omega = curvature(args[0], args[1]);
    record(report, structure(pair) == omega,
           [&] { return "d theta + theta^theta != Omega at " + tuple_text({samples[0], samples[1]}); });
    record(report, smoothing_part(args[0], args[1]) == omega,
           [&] { return "curvature != smoothing_part at " + tuple_text({samples[0], samples[1]}); });
    record(report, finite_rank_support(omega).has_value(),
           [&] { return "curvature not finite rank at " + tuple_text({samples[0], samples[1]}); });
    record(report, bianchi(args).is_zero(), [&] { return "d Omega + [theta, Omega] != 0 at " + tuple_text(samples); });
  }
  return report;
}

VerificationReport residue_trace_sweep(const SweepConfig& config) {
  VerificationReport report;
  report.kind = "residue-trace";
  Rng rng(config.seed);
  const long degree = std::min(config.degree, 3L);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const long oa = rng.uniform(-2, 2);
    const long ob = rng.uniform(-2, 2);
    const auto a = random_symbol(rng, config.dim, oa, config.depth, degree);
    const auto b = random_symbol(rng, config.dim, ob, config.depth, degree);
    const auto value = wodzicki_residue(star_commutator(a, b, config.depth));
    record(report, value.is_zero(), [&] {
      return "res[A, B] = " + to_string(value) + " for orders (" + std::to_string(oa) + ", " + std::to_string(ob) +
             ")";
    });
    const auto ab = renormalized_bracket_trace(a, b, config.depth);
    const auto ba = renormalized_bracket_trace(b, a, config.depth);
    record(report, ab == -ba, [&] {
      return "renormalized bracket trace not antisymmetric: " + to_string(ab) + " vs " + to_string(ba) +
             " for orders (" + std::to_string(oa) + ", " + std::to_string(ob) + ")";
    });
  }
  return report;
}

VerificationReport oracle_sweep(const SweepConfig& config) {
  VerificationReport report;
  report.kind = "oracle";
  Rng rng(config.seed);
  const long degree = std::min(config.degree, 3L);
  const long d = static_cast<long>(config.dim);
  for (std::size_t s = 0; s < config.samples; ++s) {
    std::vector<Sample> samples;
    for (int i = 0; i < 3; ++i) samples.push_back(random_generator_word(rng, config.dim, degree));
    const auto& a = samples[0].op;
    const auto& b = samples[1].op;
    const auto& c = samples[2].op;
    const auto ab = a * b;
    record(report, ab * c == a * (b * c), [&] { return "(AB)C != A(BC) at " + tuple_text(samples); });

    const long spread = std::max({diagonal_spread(a), diagonal_spread(b), 1L});
    const long n = 3 * spread + 2;
    const long inner = n - 2 * spread;
    const auto start = static_cast<std::size_t>((n - inner) * d);
    const auto size = static_cast<std::size_t>((2 * inner + 1) * d);
    const auto structural = dense_window(ab, n).block(start, start, size, size);
    const auto dense = (dense_window(a, n) * dense_window(b, n)).block(start, start, size, size);
    record(report, structural == dense, [&] { return "window(AB) != window(A) window(B) at " + tuple_text(samples); });
  }
  return report;
}

VerificationReport commutator_trace_sweep(const SweepConfig& config) {
  VerificationReport report;
  report.kind = "commutator-trace";
  Rng rng(config.seed);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const auto f = random_finite_rank(rng, config.dim, 3);
    const auto b = rng.coin() ? random_generator_word(rng, config.dim, std::min(config.degree, 3L))
                              : random_sweep_element(rng, config.dim, config.degree, true);
    const auto value = trace(commutator(f.op, b.op));
    record(report, value.is_zero(),
           [&] { return "tr[F, B] = " + to_string(value) + " at " + tuple_text({f, b}); });
    record(report, trace(f.op * b.op) == trace(b.op * f.op),
           [&] { return "tr(FB) != tr(BF) at " + tuple_text({f, b}); });
  }
  return report;
}

DenseMatrix dense_curvature_oracle(long m, long n, long half_width) {
  const auto zm = dense_window(z_op(m, 1), half_width);
  const auto zn = dense_window(z_op(n, 1), half_width);
  const auto p = dense_window(op_projection_plus(1), half_width);
  // [z^m, z^n] = 0, so the theta_[a,b] term drops out.
  return zm * p * zn * p - zn * p * zm * p;
}

VerificationReport case_table_sweep(long radius) {
  VerificationReport report;
  report.kind = "case-table";
  const long n_window = 3 * radius + 1;
  for (long m = -radius; m <= radius; ++m) {
    for (long n = -radius; n <= radius; ++n) {
      const auto omega = curvature(z_op(m, 1), z_op(n, 1));
      const auto dense = dense_curvature_oracle(m, n, n_window);
      for (long k = -radius; k <= radius; ++k) {
        const auto verdict = omega_case_classifier(m, n, k);
        ModeVector expected;
        if (verdict.sign != 0) expected[*verdict.mode] = {GaussianRational(verdict.sign)};
        const bool structural_ok = apply(omega, k, {GaussianRational(1)}) == expected;
        bool dense_ok = true;
        const auto col = static_cast<std::size_t>(k + n_window);
        for (long t = -n_window; t <= n_window; ++t) {
          const auto it = expected.find(t);
          const GaussianRational want = it == expected.end() ? GaussianRational() : it->second[0];
          if (!(dense(static_cast<std::size_t>(t + n_window), col) == want)) dense_ok = false;
        }
        record(report, structural_ok && dense_ok, [&] {
          return "(m, n, k) = (" + std::to_string(m) + ", " + std::to_string(n) + ", " + std::to_string(k) +
                 "): classifier sign " + std::to_string(verdict.sign) + (structural_ok ? "" : ", structural differs") +
                 (dense_ok ? "" : ", dense window differs");
        });
      }
    }
  }
  return report;
}

VerificationReport off_diagonal_trace_sweep(long radius) {
  VerificationReport report;
  report.kind = "off-diagonal-trace";
  const auto width = static_cast<std::size_t>(2 * radius + 1);
  std::vector<LatticeOperator> omega;
  omega.reserve(width * width);
  for (long m = -radius; m <= radius; ++m) {
    for (long n = -radius; n <= radius; ++n) omega.push_back(curvature(z_op(m, 1), z_op(n, 1)));
  }
  const auto at = [&](long m, long n) -> const LatticeOperator& {
    return omega[static_cast<std::size_t>(m + radius) * width + static_cast<std::size_t>(n + radius)];
  };
  for (long m = -radius; m <= radius; ++m) {
    for (long n = -radius; n <= radius; ++n) {
      for (long p = -radius; p <= radius; ++p) {
        for (long q = -radius; q <= radius; ++q) {
          const auto value = trace(at(m, n) * at(p, q));
          const auto counts = count_signs(m, n, p, q);
          const GaussianRational want = m + n + p + q == 0 ? GaussianRational(counts.n1 - counts.n_minus1) : 0;
          record(report, value == want, [&] {
            return "tr Omega(z^" + std::to_string(m) + ",z^" + std::to_string(n) + ") Omega(z^" + std::to_string(p) +
                   ",z^" + std::to_string(q) + ") = " + to_string(value) + ", expected " + to_string(want);
          });
        }
      }
    }
  }
  return report;
}

}  // namespace pdoc
