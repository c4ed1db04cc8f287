#include "pdoc/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace pdoc {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text[0] == '-' ||
      den_text[0] == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  const std::string num(num_text[0] == '+' ? num_text.substr(1) : num_text);
  mpz_class n(num, 10);
  mpz_class d(std::string(den_text), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  const Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero");
  *this *= rhs.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

namespace {

std::string short_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_string(q);
}

}  // namespace

std::string to_string(const GaussianRational& value) {
  if (value.is_real()) return short_rational(value.re());
  std::string im;
  if (value.im() == 1) {
    im = "i";
  } else if (value.im() == -1) {
    im = "-i";
  } else {
    im = short_rational(value.im()) + "i";
  }
  if (sgn(value.re()) == 0) return im;
  if (im[0] != '-') im = "+" + im;
  return short_rational(value.re()) + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << to_string(value); }

GaussianRational i_power(long power) {
  switch (((power % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace pdoc
