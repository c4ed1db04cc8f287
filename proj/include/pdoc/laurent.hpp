#pragma once

#include <cstddef>
#include <map>

#include "pdoc/matrix.hpp"

namespace pdoc {

/// Matrix-valued function on the circle with finite Fourier support: sum_m coeff(m) z^m.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t dim = 1) : dim_(dim) {}

  static LaurentPoly monomial(long mode, const Matrix& coeff);
  /// z^mode tensored with the identity of the fibre.
  static LaurentPoly z(long mode, std::size_t dim = 1);
  static LaurentPoly constant(const Matrix& coeff) { return monomial(0, coeff); }

  std::size_t dim() const { return dim_; }
  const std::map<long, Matrix>& coeffs() const { return coeffs_; }
  Matrix coeff(long mode) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// max |m| over the support, 0 when zero.
  long degree() const;

  void add_term(long mode, const Matrix& coeff);

  /// d/dx, with z^m = e^{imx}: multiplies coefficient m by i m.
  LaurentPoly derivative() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(const GaussianRational& factor, const LaurentPoly& p);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t dim_;
  std::map<long, Matrix> coeffs_;
};

}  // namespace pdoc
