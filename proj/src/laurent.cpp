#include "pdoc/laurent.hpp"

#include <cstdlib>

namespace pdoc {

LaurentPoly LaurentPoly::monomial(long mode, const Matrix& coeff) {
  LaurentPoly p(coeff.dim());
  p.add_term(mode, coeff);
  return p;
}

LaurentPoly LaurentPoly::z(long mode, std::size_t dim) { return monomial(mode, Matrix::identity(dim)); }

Matrix LaurentPoly::coeff(long mode) const {
  auto it = coeffs_.find(mode);
  return it == coeffs_.end() ? Matrix::zero(dim_) : it->second;
}

long LaurentPoly::degree() const {
  long deg = 0;
  for (const auto& [m, c] : coeffs_) deg = std::max(deg, std::labs(m));
  return deg;
}

void LaurentPoly::add_term(long mode, const Matrix& coeff) {
  require_same_dim(dim_, coeff.dim(), "LaurentPoly term");
  auto [it, inserted] = coeffs_.try_emplace(mode, coeff);
  if (!inserted) it->second += coeff;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly out(dim_);
  for (const auto& [m, c] : coeffs_) out.add_term(m, c * GaussianRational(0, m));
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_dim(dim_, rhs.dim_, "LaurentPoly sum");
  for (const auto& [m, c] : rhs.coeffs_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_dim(dim_, rhs.dim_, "LaurentPoly difference");
  for (const auto& [m, c] : rhs.coeffs_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "LaurentPoly product");
  LaurentPoly out(lhs.dim_);
  for (const auto& [m, a] : lhs.coeffs_) {
    for (const auto& [n, b] : rhs.coeffs_) out.add_term(m + n, a * b);
  }
  return out;
}

LaurentPoly operator*(const GaussianRational& factor, const LaurentPoly& p) {
  LaurentPoly out(p.dim_);
  if (factor.is_zero()) return out;
  for (const auto& [m, c] : p.coeffs_) out.add_term(m, c * factor);
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return GaussianRational(-1) * *this; }

}  // namespace pdoc
