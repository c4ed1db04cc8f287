#include "pdoc/matrix.hpp"

#include <algorithm>

#include "pdoc/errors.hpp"

namespace pdoc {

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

Matrix Matrix::identity(std::size_t dim) { return scalar(dim, 1); }

Matrix Matrix::scalar(std::size_t dim, const GaussianRational& value) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

Matrix Matrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) throw std::out_of_range("matrix unit index out of range");
  Matrix m(dim);
  m(row, col) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& x) { return x.is_zero(); });
}

GaussianRational Matrix::trace() const {
  GaussianRational sum;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& factor) {
  for (auto& x : entries_) x *= factor;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "matrix product");
  const std::size_t d = lhs.dim_;
  Matrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      const auto& a = lhs(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const auto& b = rhs(l, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.entries_) x = -x;
  return out;
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

std::string to_string(const Matrix& m) {
  if (m.dim() == 1) return to_string(m(0, 0));
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
  }
  return out + "]";
}

}  // namespace pdoc
