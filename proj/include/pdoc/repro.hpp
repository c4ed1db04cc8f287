#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdoc/cocycles.hpp"
#include "pdoc/symbols.hpp"

namespace pdoc {

// ---------------------------------------------------------------------------
// Closed-form case analysis of Omega(z^m, z^n) on the Fourier basis.

struct CaseVerdict {
  int sign = 0;             // 0, +1, -1
  std::optional<long> mode;  // k + m + n when sign != 0
  friend bool operator==(const CaseVerdict&, const CaseVerdict&) = default;
};

/// Omega(z^m, z^n) e_k = sign * e_{k+m+n}:
///   0   if k <= 0, or m+k > 0 and n+k > 0, or m+k <= 0 and n+k <= 0
///   +1  if k > 0, m+k <= 0, n+k > 0
///   -1  if k > 0, m+k > 0, n+k <= 0
/// (the case m+k <= 0, n+k <= 0 vanishes because p_+ annihilates both terms).
CaseVerdict omega_case_classifier(long m, long n, long k);

struct SignCounts {
  long n1 = 0;
  long n_minus1 = 0;
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

/// Number of k with Omega(z^m,z^n) Omega(z^p,z^q) e_k = +e_{k+m+n+p+q} (n1) and
/// = -e_{k+m+n+p+q} (n_minus1), by interval intersection.
SignCounts count_signs_closed_form(long m, long n, long p, long q);
/// Same counts by enumerating |k| <= 2(|m|+|n|+|p|+|q|) + 1.
SignCounts count_signs_enumerated(long m, long n, long p, long q);
/// Both routes; throws InternalMismatch if they disagree.
SignCounts count_signs(long m, long n, long p, long q);

// ---------------------------------------------------------------------------
// Four-cocycle permutation table.

struct PermutationReport {
  std::array<std::size_t, 4> permutation{};
  std::array<long, 4> modes{};  // (s(m), s(n), s(p), s(q))
  int sign = 1;
  SignCounts counts;
  GaussianRational trace_contribution;  // d (n1 - n_minus1) if the modes sum to 0, else 0
  GaussianRational structural_trace;    // trace of the composed lattice operators
};

struct FourCocycleTable {
  std::array<long, 4> modes{};
  std::size_t dim = 1;
  std::vector<PermutationReport> rows;   // lexicographic in the permutation
  GaussianRational total;                // 1/24 sum eps(s) trace_contribution
  GaussianRational structural_total;     // chern_cocycle(2, z^m, z^n, z^p, z^q)
};

FourCocycleTable four_cocycle_table(long m, long n, long p, long q, std::size_t dim = 1);

/// The structural claims made about the table at (-2, 2, -3, 3).
struct FourCocycleClaims {
  bool counts_in_zero_two = false;  // (n1, n_minus1) in {0, 2}^2 for every row
  bool even_rows_have_no_minus = false;
  bool odd_rows_have_no_plus = false;
  bool identity_row_trace_is_2d = false;
  bool total_positive = false;
  bool rows_consistent = false;  // closed-form contribution == structural trace on every row
  bool all() const {
    return counts_in_zero_two && even_rows_have_no_minus && odd_rows_have_no_plus && identity_row_trace_is_2d &&
           total_positive && rows_consistent;
  }
};

FourCocycleClaims check_four_cocycle_claims(const FourCocycleTable& table);

/// Real and strictly positive.
bool is_positive(const GaussianRational& z);

// ---------------------------------------------------------------------------
// k = 1 comparison on the abelian family z^m.

struct ComparisonRow {
  long m = 0;
  GaussianRational chern;       // chern_cocycle(1, z^-m, z^m)
  GaussianRational schwinger;   // schwinger_cocycle(z^-m, z^m)
  GaussianRational radul;       // radul_cocycle(z^-m, z^m), calibrated
  GaussianRational radul_raw;   // uncalibrated residue
  GaussianRational bracket_trace;            // renormalized_bracket_trace(p+(z^-m), p+(z^m))
  GaussianRational theta_commutator_trace;   // trace [theta_{z^-m}, theta_{z^m}]
};

struct SchwingerComparison {
  std::size_t dim = 1;
  std::vector<ComparisonRow> rows;
  std::optional<GaussianRational> schwinger_over_chern;  // present when constant across rows
  std::optional<GaussianRational> radul_over_chern;
  std::optional<GaussianRational> bracket_over_theta;
  bool chern_nonzero = false;
  bool chern_linear_in_m = false;
  bool proportional() const {
    return chern_nonzero && chern_linear_in_m && schwinger_over_chern && radul_over_chern && bracket_over_theta;
  }
};

SchwingerComparison schwinger_comparison(long m_first, long m_last, std::size_t dim = 1,
                                         std::size_t depth = kDefaultSymbolDepth);

/// chern_cocycle(1, z^-1, z) / radul_residue(z^-1, z): the kappa frozen in radul_normalization().
GaussianRational calibrate_radul_normalization(std::size_t depth = kDefaultSymbolDepth);

// ---------------------------------------------------------------------------
// Verification sweeps.

struct SweepConfig {
  unsigned k = 1;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  long degree = 4;
  std::size_t dim = 1;
  std::size_t depth = kDefaultSymbolDepth;
  bool include_abs_d = false;
};

struct VerificationReport {
  std::string kind;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few failing inputs
  std::vector<std::string> diagnostics;      // reported, never asserted
  bool passed() const { return failures == 0 && checks > 0; }
};

/// ce_coboundary(tr Omega^k) == 0 on random (2k+1)-tuples; Hochschild values as diagnostics.
VerificationReport closedness_sweep(const SweepConfig& config);
/// Structure equation d theta + theta^theta == Omega, curvature == smoothing_part and
/// Bianchi d Omega + [theta, Omega] == 0 on random triples.
VerificationReport bianchi_sweep(const SweepConfig& config);
/// Wodzicki residue of star commutators vanishes and the renormalized bracket trace is
/// antisymmetric; orders in [-2, 2].
VerificationReport residue_trace_sweep(const SweepConfig& config);
/// Structural composition against dense-window products, plus associativity.
VerificationReport oracle_sweep(const SweepConfig& config);
/// trace [F, B] == 0 and tr(FB) == tr(BF) for finite-rank F.
VerificationReport commutator_trace_sweep(const SweepConfig& config);
/// Classifier vs structural curvature vs dense-window products for (m, n, k) in [-r, r]^3.
VerificationReport case_table_sweep(long radius = 6);
/// tr Omega(z^m,z^n) Omega(z^p,z^q) == 0 whenever m+n+p+q != 0, over [-r, r]^4.
VerificationReport off_diagonal_trace_sweep(long radius = 3);

/// Omega(z^m, z^n) on modes -N..N built only from dense windows of z^m, z^n, p_+.
DenseMatrix dense_curvature_oracle(long m, long n, long half_width);

}  // namespace pdoc
