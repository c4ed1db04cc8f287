#include "pdoc/index_poly.hpp"

namespace pdoc {

IndexPoly::IndexPoly(std::size_t dim, std::vector<Matrix> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_dim(dim_, c.dim(), "IndexPoly coefficient");
  trim();
}

IndexPoly IndexPoly::constant(const Matrix& c) { return IndexPoly(c.dim(), {c}); }

IndexPoly IndexPoly::linear(const Matrix& c) { return IndexPoly(c.dim(), {Matrix::zero(c.dim()), c}); }

void IndexPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Matrix IndexPoly::operator()(long k) const {
  // Horner
  Matrix value(dim_);
  const GaussianRational x(k);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value *= x;
    value += *it;
  }
  return value;
}

bool IndexPoly::trace_is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.trace().is_zero()) return false;
  }
  return true;
}

IndexPoly IndexPoly::shifted(long offset) const {
  if (offset == 0 || coeffs_.size() <= 1) return *this;
  // (k + s)^i = sum_j binom(i, j) s^(i-j) k^j
  std::vector<Matrix> out(coeffs_.size(), Matrix::zero(dim_));
  const mpz_class s(offset);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    mpz_class binom = 1;
    for (std::size_t j = i + 1; j-- > 0;) {
      // term k^j has coefficient binom(i, j) * s^(i - j)
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), s.get_mpz_t(), i - j);
      out[j] += coeffs_[i] * GaussianRational(Rational(binom * power));
      if (j > 0) binom = binom * static_cast<unsigned long>(j) / static_cast<unsigned long>(i - j + 1);
    }
  }
  return IndexPoly(dim_, std::move(out));
}

IndexPoly& IndexPoly::operator+=(const IndexPoly& rhs) {
  require_same_dim(dim_, rhs.dim_, "IndexPoly sum");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Matrix::zero(dim_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IndexPoly& IndexPoly::operator-=(const IndexPoly& rhs) {
  require_same_dim(dim_, rhs.dim_, "IndexPoly difference");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Matrix::zero(dim_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IndexPoly operator*(const IndexPoly& lhs, const IndexPoly& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "IndexPoly product");
  if (lhs.is_zero() || rhs.is_zero()) return IndexPoly(lhs.dim_);
  std::vector<Matrix> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Matrix::zero(lhs.dim_));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (!rhs.coeffs_[j].is_zero()) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IndexPoly(lhs.dim_, std::move(out));
}

IndexPoly operator*(const GaussianRational& factor, const IndexPoly& p) {
  std::vector<Matrix> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(c * factor);
  return IndexPoly(p.dim_, std::move(out));
}

}  // namespace pdoc
