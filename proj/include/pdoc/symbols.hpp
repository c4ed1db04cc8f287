#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pdoc/laurent.hpp"

namespace pdoc {

/// Homogeneous partial symbol of degree j, stored by its values at xi = +1 and xi = -1:
/// sigma(x, xi) = plus(x) xi^j for xi > 0 and minus(x) (-xi)^j for xi < 0.
struct PartialSymbol {
  long degree = 0;
  LaurentPoly plus;
  LaurentPoly minus;

  bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
  friend bool operator==(const PartialSymbol&, const PartialSymbol&) = default;
};

inline constexpr std::size_t kDefaultSymbolDepth = 6;

/// Classical symbol truncated to the partial symbols of degrees order, order-1, ...,
/// order-depth+1. Slots below the depth are unknown, not zero.
class FormalSymbol {
 public:
  FormalSymbol(std::size_t dim, long order, std::size_t depth);

  std::size_t dim() const { return dim_; }
  long order() const { return order_; }
  std::size_t depth() const { return parts_.size(); }
  long lowest_degree() const { return order_ - static_cast<long>(parts_.size()) + 1; }
  bool stores(long degree) const { return degree <= order_ && degree >= lowest_degree(); }

  const std::vector<PartialSymbol>& parts() const { return parts_; }
  /// Partial symbol of the given degree: zero above the order, DepthInsufficient below
  /// the lowest stored degree.
  PartialSymbol at(long degree) const;
  /// Mutable access to a stored slot; throws DepthInsufficient otherwise.
  PartialSymbol& part(long degree);

  /// Same symbol with fewer stored degrees.
  FormalSymbol truncated(std::size_t depth) const;

  bool is_zero() const;

  friend bool operator==(const FormalSymbol&, const FormalSymbol&) = default;

 private:
  std::size_t dim_;
  long order_;
  std::vector<PartialSymbol> parts_;
};

/// Compare on the degrees both symbols store; degrees above an order count as zero.
bool agree_to_depth(const FormalSymbol& a, const FormalSymbol& b);

FormalSymbol symbol_add(const FormalSymbol& a, const FormalSymbol& b);
FormalSymbol symbol_subtract(const FormalSymbol& a, const FormalSymbol& b);
FormalSymbol symbol_scale(const GaussianRational& factor, const FormalSymbol& a);

/// sigma(A o B)_l = sum_{j + k - alpha = l} (-i)^alpha / alpha! d_xi^alpha sigma_j(A) d_x^alpha sigma_k(B),
/// truncated to min(depth, depth(A), depth(B)) parts.
FormalSymbol star_product(const FormalSymbol& a, const FormalSymbol& b, std::size_t depth = kDefaultSymbolDepth);
FormalSymbol star_commutator(const FormalSymbol& a, const FormalSymbol& b, std::size_t depth = kDefaultSymbolDepth);

/// d/dxi of a partial symbol: (plus, minus)_j -> (j plus, -j minus)_{j-1}.
PartialSymbol xi_derivative(const PartialSymbol& s);

FormalSymbol symbol_p_plus(const FormalSymbol& a);
FormalSymbol symbol_p_minus(const FormalSymbol& a);

/// tr coeff_0(sigma_{-1}.plus) + tr coeff_0(sigma_{-1}.minus).
GaussianRational wodzicki_residue(const FormalSymbol& a);

/// [A, log Delta] = -sum_{alpha >= 1} (-i)^alpha / alpha! d_xi^alpha(2 log|xi|) d_x^alpha sigma(A).
FormalSymbol log_laplacian_bracket(const FormalSymbol& a, std::size_t depth = kDefaultSymbolDepth);

/// tr^Delta [A, B] = -1/2 res(A [B, log Delta]).
GaussianRational renormalized_bracket_trace(const FormalSymbol& a, const FormalSymbol& b,
                                            std::size_t depth = kDefaultSymbolDepth);

/// res(p_+(X) [p_+(Y), log Delta]) without normalization.
GaussianRational radul_residue(const FormalSymbol& x, const FormalSymbol& y, std::size_t depth = kDefaultSymbolDepth);

/// Normalization measured against chern_cocycle(1, z^-1, z) by the calibration harness
/// (repro::calibrate_radul_normalization); frozen here.
GaussianRational radul_normalization();

/// kappa * radul_residue(X, Y).
GaussianRational radul_cocycle(const FormalSymbol& x, const FormalSymbol& y, const GaussianRational& kappa,
                               std::size_t depth = kDefaultSymbolDepth);
GaussianRational radul_cocycle(const FormalSymbol& x, const FormalSymbol& y, std::size_t depth = kDefaultSymbolDepth);

/// Degree-0 symbol with plus = minus = P.
FormalSymbol symbol_of_multiplication(const LaurentPoly& p, std::size_t depth = kDefaultSymbolDepth);

/// P_PLUS, P_MINUS, D, ABS_D, DELTA. Throws UnknownBuiltin otherwise.
FormalSymbol symbol_of_builtin(std::string_view name, std::size_t dim = 1, std::size_t depth = kDefaultSymbolDepth);

}  // namespace pdoc
