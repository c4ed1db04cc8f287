#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "pdoc/dense.hpp"
#include "pdoc/diagonal_profile.hpp"
#include "pdoc/laurent.hpp"

namespace pdoc {

/// Operator on l2(Z) (x) C^d with finitely many generalized diagonals.
///
/// Diagonal j sends the basis mode k to mode k + j with fibre matrix profile_j(k),
/// so entry(target, source) = profile_{target - source}(source). Laurent
/// multiplication operators, D, |D|, the spectral projections and every finite-rank
/// operator of the Fourier basis live in this class, and it is closed under
/// composition. Zero diagonals are never stored.
class LatticeOperator {
 public:
  explicit LatticeOperator(std::size_t dim = 1) : dim_(dim) {}
  LatticeOperator(std::size_t dim, std::map<long, DiagonalProfile> diagonals);

  static LatticeOperator zero(std::size_t dim = 1) { return LatticeOperator(dim); }
  static LatticeOperator identity(std::size_t dim = 1);

  std::size_t dim() const { return dim_; }
  const std::map<long, DiagonalProfile>& diagonals() const { return diagonals_; }
  const DiagonalProfile* diagonal(long offset) const;

  Matrix entry(long target, long source) const;
  bool is_zero() const { return diagonals_.empty(); }

  friend bool operator==(const LatticeOperator& a, const LatticeOperator& b) {
    return a.dim_ == b.dim_ && a.diagonals_ == b.diagonals_;
  }

 private:
  std::size_t dim_;
  std::map<long, DiagonalProfile> diagonals_;
};

/// Multiplication by a Laurent polynomial: e_k (x) v -> sum_m e_{k+m} (x) P_m v.
LatticeOperator op_from_laurent(const LaurentPoly& p);
/// Projection onto the modes k >= 1.
LatticeOperator op_projection_plus(std::size_t dim = 1);
/// Projection onto the modes k <= -1.
LatticeOperator op_projection_minus(std::size_t dim = 1);
/// Projection onto the constant mode k = 0.
LatticeOperator op_projection_zero(std::size_t dim = 1);
/// D = -i d/dx, eigenvalue k on mode k.
LatticeOperator op_derivative(std::size_t dim = 1);
/// |D|, eigenvalue |k| on mode k.
LatticeOperator op_abs_derivative(std::size_t dim = 1);
/// Constant fibre matrix acting on every mode.
LatticeOperator op_constant(const Matrix& m);

LatticeOperator compose(const LatticeOperator& a, const LatticeOperator& b);
LatticeOperator add(const LatticeOperator& a, const LatticeOperator& b);
LatticeOperator subtract(const LatticeOperator& a, const LatticeOperator& b);
LatticeOperator scale(const GaussianRational& factor, const LatticeOperator& a);
/// ab - ba
LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b);

inline LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b) { return compose(a, b); }
inline LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b) { return add(a, b); }
inline LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b) { return subtract(a, b); }
inline LatticeOperator operator*(const GaussianRational& f, const LatticeOperator& a) { return scale(f, a); }
inline LatticeOperator operator-(const LatticeOperator& a) { return scale(-1, a); }

struct ModeInterval {
  long lo = 0;
  long hi = -1;
  bool empty() const { return lo > hi; }
  long size() const { return empty() ? 0 : hi - lo + 1; }
};

struct FiniteRankSupport {
  ModeInterval source;
  ModeInterval target;
  /// min(#source modes, #target modes) * d; 0 for the zero operator.
  std::size_t rank_bound = 0;
};

/// Present iff every diagonal is finitely supported.
std::optional<FiniteRankSupport> finite_rank_support(const LatticeOperator& a);

/// Exact rank of a finite-rank operator; absent when the operator is not finite rank.
std::optional<std::size_t> exact_rank(const LatticeOperator& a);

/// sum_k tr entry(k, k). Throws NotTraceComputable unless both tails of the j = 0
/// diagonal have identically zero scalar trace.
GaussianRational trace(const LatticeOperator& a);

using ModeVector = std::map<long, std::vector<GaussianRational>>;

/// A (e_mode (x) v), zero components dropped.
ModeVector apply(const LatticeOperator& a, long mode, const std::vector<GaussianRational>& v);

/// Restriction to modes -half_width..half_width; block (r, c) is entry(r - N, c - N).
DenseMatrix dense_window(const LatticeOperator& a, long half_width);

/// Smallest s with every diagonal offset in [-s, s].
long diagonal_spread(const LatticeOperator& a);

}  // namespace pdoc
