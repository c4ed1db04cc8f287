#pragma once

#include <cstddef>
#include <map>

#include "pdoc/index_poly.hpp"

namespace pdoc {

/// Entries of one generalized diagonal as a function of the source mode k:
///
///   k <= left_bound            -> left(k)
///   left_bound < k < right_bound -> window[k] (zero when absent)
///   k >= right_bound           -> right(k)
///
/// Every constructed profile is canonical: the polynomials are determined by the
/// tails, left_bound is maximal, right_bound minimal, and the window holds only
/// nonzero entries. A profile equal to one polynomial everywhere is stored with
/// bounds (-1, 0). Two profiles describing the same function compare equal.
class DiagonalProfile {
 public:
  explicit DiagonalProfile(std::size_t dim = 1);
  DiagonalProfile(IndexPoly left, IndexPoly right, long left_bound, long right_bound,
                  std::map<long, Matrix> window = {});

  static DiagonalProfile polynomial(const IndexPoly& p) { return {p, p, -1, 0}; }
  static DiagonalProfile constant(const Matrix& c) { return polynomial(IndexPoly::constant(c)); }
  /// Finitely supported profile.
  static DiagonalProfile finite(std::size_t dim, std::map<long, Matrix> entries);

  std::size_t dim() const { return left_.dim(); }
  const IndexPoly& left() const { return left_; }
  const IndexPoly& right() const { return right_; }
  long left_bound() const { return left_bound_; }
  long right_bound() const { return right_bound_; }
  const std::map<long, Matrix>& window() const { return window_; }

  Matrix operator()(long k) const;

  bool is_zero() const { return left_.is_zero() && right_.is_zero() && window_.empty(); }
  /// Both tails vanish: finitely many nonzero entries.
  bool is_finite() const { return left_.is_zero() && right_.is_zero(); }

  /// k -> f(k + offset)
  DiagonalProfile shifted(long offset) const;

  friend DiagonalProfile operator+(const DiagonalProfile& a, const DiagonalProfile& b);
  friend DiagonalProfile operator-(const DiagonalProfile& a, const DiagonalProfile& b);
  /// Pointwise matrix product f(k) g(k).
  friend DiagonalProfile operator*(const DiagonalProfile& a, const DiagonalProfile& b);
  friend DiagonalProfile operator*(const GaussianRational& factor, const DiagonalProfile& a);

  friend bool operator==(const DiagonalProfile& a, const DiagonalProfile& b) {
    return a.left_bound_ == b.left_bound_ && a.right_bound_ == b.right_bound_ && a.left_ == b.left_ &&
           a.right_ == b.right_ && a.window_ == b.window_;
  }

 private:
  void canonicalize();

  IndexPoly left_;
  IndexPoly right_;
  long left_bound_ = -1;
  long right_bound_ = 0;
  std::map<long, Matrix> window_;
};

}  // namespace pdoc
