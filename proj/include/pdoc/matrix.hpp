#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdoc/scalar.hpp"

namespace pdoc {

/// d x d matrix of GaussianRational: the fibre coefficient of every operator and symbol.
class Matrix {
 public:
  Matrix() : Matrix(1) {}
  explicit Matrix(std::size_t dim);

  static Matrix zero(std::size_t dim) { return Matrix(dim); }
  static Matrix identity(std::size_t dim);
  static Matrix scalar(std::size_t dim, const GaussianRational& value);
  /// E_ij, zero-based indices.
  static Matrix unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t dim() const { return dim_; }
  GaussianRational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const GaussianRational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  bool is_zero() const;
  GaussianRational trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const GaussianRational& factor);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const GaussianRational& factor) { return lhs *= factor; }
  friend Matrix operator*(const GaussianRational& factor, Matrix rhs) { return rhs *= factor; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

 private:
  std::size_t dim_;
  std::vector<GaussianRational> entries_;
};

void require_same_dim(std::size_t a, std::size_t b, const char* where);

std::string to_string(const Matrix& m);

}  // namespace pdoc
