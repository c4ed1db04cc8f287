#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace pdoc {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (whitespace not allowed). Result is canonical.
Rational parse_rational(std::string_view text);

/// Always "p/q", q > 0, lowest terms ("2/1", "0/1").
std::string to_string(const Rational& value);

/// Exact complex number with rational parts; the only scalar type in the library.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

/// "a", "bi" or "a+bi" with rational a, b in "p/q" form where q != 1.
std::string to_string(const GaussianRational& value);
std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

/// i^power for any integer power.
GaussianRational i_power(long power);

}  // namespace pdoc
