#pragma once

#include <cstddef>
#include <vector>

#include "pdoc/matrix.hpp"

namespace pdoc {

/// Polynomial in the lattice index k with matrix coefficients: sum_i c_i k^i.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no coefficients.
class IndexPoly {
 public:
  explicit IndexPoly(std::size_t dim = 1) : dim_(dim) {}
  IndexPoly(std::size_t dim, std::vector<Matrix> coeffs);

  static IndexPoly constant(const Matrix& c);
  /// c * k
  static IndexPoly linear(const Matrix& c);

  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Matrix operator()(long k) const;
  /// Scalar polynomial k -> tr(p(k)) is identically zero.
  bool trace_is_zero() const;

  /// k -> p(k + offset)
  IndexPoly shifted(long offset) const;

  IndexPoly& operator+=(const IndexPoly& rhs);
  IndexPoly& operator-=(const IndexPoly& rhs);
  friend IndexPoly operator+(IndexPoly lhs, const IndexPoly& rhs) { return lhs += rhs; }
  friend IndexPoly operator-(IndexPoly lhs, const IndexPoly& rhs) { return lhs -= rhs; }
  friend IndexPoly operator*(const IndexPoly& lhs, const IndexPoly& rhs);
  friend IndexPoly operator*(const GaussianRational& factor, const IndexPoly& p);

  friend bool operator==(const IndexPoly& a, const IndexPoly& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::size_t dim_;
  std::vector<Matrix> coeffs_;
};

}  // namespace pdoc
