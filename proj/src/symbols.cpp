#include "pdoc/symbols.hpp"

#include <algorithm>
#include <string>

#include "pdoc/errors.hpp"
#include "pdoc/permutations.hpp"

namespace pdoc {

FormalSymbol::FormalSymbol(std::size_t dim, long order, std::size_t depth) : dim_(dim), order_(order) {
  if (depth == 0) throw std::invalid_argument("FormalSymbol: depth must be >= 1");
  parts_.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    parts_.push_back({order - static_cast<long>(i), LaurentPoly(dim), LaurentPoly(dim)});
  }
}

PartialSymbol FormalSymbol::at(long degree) const {
  if (degree > order_) return {degree, LaurentPoly(dim_), LaurentPoly(dim_)};
  if (degree < lowest_degree()) {
    throw DepthInsufficient("partial symbol of degree " + std::to_string(degree) + " lies below the truncation (" +
                            std::to_string(lowest_degree()) + ")");
  }
  return parts_[static_cast<std::size_t>(order_ - degree)];
}

PartialSymbol& FormalSymbol::part(long degree) {
  if (!stores(degree)) {
    throw DepthInsufficient("partial symbol of degree " + std::to_string(degree) + " is not stored");
  }
  return parts_[static_cast<std::size_t>(order_ - degree)];
}

FormalSymbol FormalSymbol::truncated(std::size_t depth) const {
  FormalSymbol out(*this);
  if (depth == 0) throw std::invalid_argument("FormalSymbol::truncated: depth must be >= 1");
  if (depth < out.parts_.size()) out.parts_.resize(depth);
  return out;
}

bool FormalSymbol::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.is_zero(); });
}

bool agree_to_depth(const FormalSymbol& a, const FormalSymbol& b) {
  if (a.dim() != b.dim()) return false;
  const long low = std::max(a.lowest_degree(), b.lowest_degree());
  const long top = std::max(a.order(), b.order());
  for (long deg = top; deg >= low; --deg) {
    if (a.at(deg) != b.at(deg)) return false;
  }
  return true;
}

namespace {

FormalSymbol aligned_frame(const FormalSymbol& a, const FormalSymbol& b) {
  require_same_dim(a.dim(), b.dim(), "symbol sum");
  const long order = std::max(a.order(), b.order());
  const long low = std::max(a.lowest_degree(), b.lowest_degree());
  if (low > order) throw DepthInsufficient("symbol sum: operands share no stored degree");
  return FormalSymbol(a.dim(), order, static_cast<std::size_t>(order - low + 1));
}

PartialSymbol x_derivative(const PartialSymbol& s, long times) {
  PartialSymbol out = s;
  for (long t = 0; t < times; ++t) {
    out.plus = out.plus.derivative();
    out.minus = out.minus.derivative();
  }
  return out;
}

GaussianRational minus_i_power_over_factorial(long alpha) {
  return i_power(-alpha) / GaussianRational(Rational(factorial(static_cast<unsigned>(alpha))));
}

}  // namespace

FormalSymbol symbol_add(const FormalSymbol& a, const FormalSymbol& b) {
  FormalSymbol out = aligned_frame(a, b);
  for (long deg = out.order(); deg >= out.lowest_degree(); --deg) {
    auto& slot = out.part(deg);
    const auto pa = a.at(deg);
    const auto pb = b.at(deg);
    slot.plus = pa.plus + pb.plus;
    slot.minus = pa.minus + pb.minus;
  }
  return out;
}

FormalSymbol symbol_subtract(const FormalSymbol& a, const FormalSymbol& b) {
  return symbol_add(a, symbol_scale(-1, b));
}

FormalSymbol symbol_scale(const GaussianRational& factor, const FormalSymbol& a) {
  FormalSymbol out(a);
  for (long deg = out.order(); deg >= out.lowest_degree(); --deg) {
    auto& slot = out.part(deg);
    slot.plus = factor * slot.plus;
    slot.minus = factor * slot.minus;
  }
  return out;
}

PartialSymbol xi_derivative(const PartialSymbol& s) {
  return {s.degree - 1, GaussianRational(s.degree) * s.plus, GaussianRational(-s.degree) * s.minus};
}

FormalSymbol star_product(const FormalSymbol& a, const FormalSymbol& b, std::size_t depth) {
  require_same_dim(a.dim(), b.dim(), "star_product");
  const std::size_t out_depth = std::min({depth, a.depth(), b.depth()});
  FormalSymbol out(a.dim(), a.order() + b.order(), out_depth);
  const long lowest = out.lowest_degree();
  for (const auto& pa : a.parts()) {
    PartialSymbol dxi = pa;  // d_xi^alpha of pa
    for (long alpha = 0;; ++alpha) {
      if (alpha > 0) dxi = xi_derivative(dxi);
      if (pa.degree - alpha + b.order() < lowest) break;
      if (dxi.is_zero()) break;
      const auto coeff = minus_i_power_over_factorial(alpha);
      for (const auto& pb : b.parts()) {
        const long deg = pa.degree + pb.degree - alpha;
        if (deg < lowest) break;
        const auto dx = x_derivative(pb, alpha);
        if (dx.is_zero()) continue;
        auto& slot = out.part(deg);
        slot.plus += coeff * (dxi.plus * dx.plus);
        slot.minus += coeff * (dxi.minus * dx.minus);
      }
    }
  }
  return out;
}

FormalSymbol star_commutator(const FormalSymbol& a, const FormalSymbol& b, std::size_t depth) {
  return symbol_subtract(star_product(a, b, depth), star_product(b, a, depth));
}

FormalSymbol symbol_p_plus(const FormalSymbol& a) {
  FormalSymbol out(a);
  for (long deg = out.order(); deg >= out.lowest_degree(); --deg) out.part(deg).minus = LaurentPoly(a.dim());
  return out;
}

FormalSymbol symbol_p_minus(const FormalSymbol& a) {
  FormalSymbol out(a);
  for (long deg = out.order(); deg >= out.lowest_degree(); --deg) out.part(deg).plus = LaurentPoly(a.dim());
  return out;
}

GaussianRational wodzicki_residue(const FormalSymbol& a) {
  const auto p = a.at(-1);
  return p.plus.coeff(0).trace() + p.minus.coeff(0).trace();
}

FormalSymbol log_laplacian_bracket(const FormalSymbol& a, std::size_t depth) {
  const std::size_t out_depth = std::min(depth, a.depth());
  FormalSymbol out(a.dim(), a.order() - 1, out_depth);
  const long lowest = out.lowest_degree();
  for (const auto& pa : a.parts()) {
    for (long alpha = 1; pa.degree - alpha >= lowest; ++alpha) {
      // d_xi^alpha (2 log|xi|) = 2 (-1)^(alpha-1) (alpha-1)! xi^(-alpha):
      // value 2 (-1)^(alpha-1) (alpha-1)! at xi = 1 and -2 (alpha-1)! at xi = -1.
      const GaussianRational fact(Rational(factorial(static_cast<unsigned>(alpha - 1))));
      const GaussianRational log_plus = GaussianRational(alpha % 2 == 1 ? 2 : -2) * fact;
      const GaussianRational log_minus = GaussianRational(-2) * fact;
      const auto coeff = -minus_i_power_over_factorial(alpha);
      const auto dx = x_derivative(pa, alpha);
      if (dx.is_zero()) continue;
      auto& slot = out.part(pa.degree - alpha);
      slot.plus += (coeff * log_plus) * dx.plus;
      slot.minus += (coeff * log_minus) * dx.minus;
    }
  }
  return out;
}

GaussianRational renormalized_bracket_trace(const FormalSymbol& a, const FormalSymbol& b, std::size_t depth) {
  return GaussianRational(Rational(-1, 2)) * wodzicki_residue(star_product(a, log_laplacian_bracket(b, depth), depth));
}

GaussianRational radul_residue(const FormalSymbol& x, const FormalSymbol& y, std::size_t depth) {
  return wodzicki_residue(star_product(symbol_p_plus(x), log_laplacian_bracket(symbol_p_plus(y), depth), depth));
}

GaussianRational radul_normalization() { return GaussianRational(Rational(-1, 2)); }

GaussianRational radul_cocycle(const FormalSymbol& x, const FormalSymbol& y, const GaussianRational& kappa,
                               std::size_t depth) {
  return kappa * radul_residue(x, y, depth);
}

GaussianRational radul_cocycle(const FormalSymbol& x, const FormalSymbol& y, std::size_t depth) {
  return radul_cocycle(x, y, radul_normalization(), depth);
}

FormalSymbol symbol_of_multiplication(const LaurentPoly& p, std::size_t depth) {
  FormalSymbol out(p.dim(), 0, depth);
  out.part(0).plus = p;
  out.part(0).minus = p;
  return out;
}

FormalSymbol symbol_of_builtin(std::string_view name, std::size_t dim, std::size_t depth) {
  const LaurentPoly id = LaurentPoly::z(0, dim);
  const LaurentPoly zero(dim);
  auto make = [&](long order, const LaurentPoly& plus, const LaurentPoly& minus) {
    FormalSymbol out(dim, order, depth);
    out.part(order).plus = plus;
    out.part(order).minus = minus;
    return out;
  };
  if (name == "P_PLUS") return make(0, id, zero);
  if (name == "P_MINUS") return make(0, zero, id);
  if (name == "D") return make(1, id, -id);
  if (name == "ABS_D") return make(1, id, id);
  if (name == "DELTA") return make(2, id, id);
  throw UnknownBuiltin("unknown symbol built-in '" + std::string(name) + "'");
}

}  // namespace pdoc
