#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pdoc/forms.hpp"
#include "pdoc/permutations.hpp"

namespace pdoc {

/// One term of the antisymmetrized Chern-Weil sum.
struct ChernTerm {
  std::vector<std::size_t> permutation;
  int sign = 1;
  GaussianRational trace;
};

struct ChernEvaluation {
  GaussianRational value;
  std::vector<ChernTerm> terms;  // lexicographic permutation order
};

/// tr(Omega^k)(a_1..a_2k) = 1/(2k)! sum_s eps(s) tr(Omega(a_s1, a_s2) ... Omega(a_s(2k-1), a_s(2k))),
/// with the per-permutation breakdown.
ChernEvaluation chern_cocycle_table(unsigned k, std::span<const LatticeOperator> args);

GaussianRational chern_cocycle(unsigned k, std::span<const LatticeOperator> args);

/// chern_cocycle(k, .) as a skew 2k-cochain.
ScalarCochain chern_cochain(unsigned k);

/// Chevalley-Eilenberg coboundary with trivial coefficients:
/// (dc)(a_0..a_p) = sum_{i<j} (-1)^{i+j} c([a_i, a_j], a_0..^i..^j..a_p).
GaussianRational ce_coboundary(const ScalarCochain& c, std::span<const LatticeOperator> args);
ScalarCochain ce_differential(const ScalarCochain& c);

/// Hochschild coboundary of a multilinear functional, cyclic end term:
/// (bc)(a_0..a_p) = sum_{i<p} (-1)^i c(.., a_i a_{i+1}, ..) + (-1)^p c(a_p a_0, a_1..a_{p-1}).
GaussianRational hochschild_coboundary(const ScalarCochain& c, std::span<const LatticeOperator> args);

/// Off-diagonal block form tr(a_+- b_-+ - b_+- a_-+), blocks taken with respect to p_+
/// and Id - p_+ (the constant mode sits in the minus block).
GaussianRational schwinger_cocycle(const LatticeOperator& a, const LatticeOperator& b);
ScalarCochain schwinger_cochain();

struct Witness {
  std::vector<std::size_t> indices;  // into the family, strictly increasing
  GaussianRational value;
};

/// Searches index tuples i_1 < ... < i_p of the family (lexicographic) for a nonzero
/// value of c. Throws NotCommuting unless the family is pairwise commuting.
std::optional<Witness> nonvanishing_witness(const ScalarCochain& c, std::span<const LatticeOperator> family);

}  // namespace pdoc
