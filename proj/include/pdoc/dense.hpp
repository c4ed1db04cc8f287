#pragma once

#include <cstddef>
#include <vector>

#include "pdoc/scalar.hpp"

namespace pdoc {

/// Dense rectangular matrix over GaussianRational. Used only as a brute-force oracle
/// and for exact rank computations on finite supports.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  GaussianRational trace() const;
  /// Gaussian elimination over the rationals.
  std::size_t rank() const;
  DenseMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> data_;
};

}  // namespace pdoc
