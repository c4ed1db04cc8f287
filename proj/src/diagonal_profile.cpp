#include "pdoc/diagonal_profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdoc {

DiagonalProfile::DiagonalProfile(std::size_t dim) : left_(dim), right_(dim) {}

DiagonalProfile::DiagonalProfile(IndexPoly left, IndexPoly right, long left_bound, long right_bound,
                                 std::map<long, Matrix> window)
    : left_(std::move(left)),
      right_(std::move(right)),
      left_bound_(left_bound),
      right_bound_(right_bound),
      window_(std::move(window)) {
  require_same_dim(left_.dim(), right_.dim(), "DiagonalProfile tails");
  if (left_bound_ >= right_bound_) throw std::invalid_argument("DiagonalProfile: left_bound must be < right_bound");
  for (const auto& [k, m] : window_) {
    require_same_dim(left_.dim(), m.dim(), "DiagonalProfile window");
    if (k <= left_bound_ || k >= right_bound_) {
      throw std::invalid_argument("DiagonalProfile: window key outside (left_bound, right_bound)");
    }
  }
  canonicalize();
}

DiagonalProfile DiagonalProfile::finite(std::size_t dim, std::map<long, Matrix> entries) {
  std::erase_if(entries, [](const auto& kv) { return kv.second.is_zero(); });
  if (entries.empty()) return DiagonalProfile(dim);
  const long lo = entries.begin()->first - 1;
  const long hi = entries.rbegin()->first + 1;
  return DiagonalProfile(IndexPoly(dim), IndexPoly(dim), lo, hi, std::move(entries));
}

Matrix DiagonalProfile::operator()(long k) const {
  if (k <= left_bound_) return left_(k);
  if (k >= right_bound_) return right_(k);
  auto it = window_.find(k);
  return it == window_.end() ? Matrix::zero(dim()) : it->second;
}

void DiagonalProfile::canonicalize() {
  // Largest L with f == left on (-inf, L].
  const IndexPoly diff = right_ - left_;
  long left_end = left_bound_;
  bool single_polynomial = false;
  for (long k = left_bound_ + 1;; ++k) {
    if (k < right_bound_) {
      if ((*this)(k) != left_(k)) break;
    } else if (diff.is_zero()) {
      single_polynomial = true;
      break;
    } else if (!diff(k).is_zero()) {
      break;
    }
    left_end = k;
  }
  if (single_polynomial) {
    right_ = left_;
    left_bound_ = -1;
    right_bound_ = 0;
    window_.clear();
    return;
  }
  // Smallest R > L with f == right on [R, inf).
  long right_start = left_end + 1;
  for (long k = right_bound_ - 1; k > left_end; --k) {
    if ((*this)(k) != right_(k)) {
      right_start = k + 1;
      break;
    }
  }
  std::map<long, Matrix> window;
  for (long k = left_end + 1; k < right_start; ++k) {
    Matrix v = (*this)(k);
    if (!v.is_zero()) window.emplace(k, std::move(v));
  }
  window_ = std::move(window);
  left_bound_ = left_end;
  right_bound_ = right_start;
}

DiagonalProfile DiagonalProfile::shifted(long offset) const {
  if (offset == 0) return *this;
  std::map<long, Matrix> window;
  for (const auto& [k, m] : window_) window.emplace(k - offset, m);
  return DiagonalProfile(left_.shifted(offset), right_.shifted(offset), left_bound_ - offset, right_bound_ - offset,
                         std::move(window));
}

namespace {

template <class Op>
DiagonalProfile combine(const DiagonalProfile& a, const DiagonalProfile& b, IndexPoly left, IndexPoly right, Op op) {
  require_same_dim(a.dim(), b.dim(), "DiagonalProfile combination");
  const long lo = std::min(a.left_bound(), b.left_bound());
  const long hi = std::max(a.right_bound(), b.right_bound());
  std::map<long, Matrix> window;
  for (long k = lo + 1; k < hi; ++k) {
    Matrix v = op(a(k), b(k));
    if (!v.is_zero()) window.emplace(k, std::move(v));
  }
  return DiagonalProfile(std::move(left), std::move(right), lo, hi, std::move(window));
}

}  // namespace

DiagonalProfile operator+(const DiagonalProfile& a, const DiagonalProfile& b) {
  return combine(a, b, a.left_ + b.left_, a.right_ + b.right_, [](const Matrix& x, const Matrix& y) { return x + y; });
}

DiagonalProfile operator-(const DiagonalProfile& a, const DiagonalProfile& b) {
  return combine(a, b, a.left_ - b.left_, a.right_ - b.right_, [](const Matrix& x, const Matrix& y) { return x - y; });
}

DiagonalProfile operator*(const DiagonalProfile& a, const DiagonalProfile& b) {
  return combine(a, b, a.left_ * b.left_, a.right_ * b.right_, [](const Matrix& x, const Matrix& y) { return x * y; });
}

DiagonalProfile operator*(const GaussianRational& factor, const DiagonalProfile& a) {
  if (factor.is_zero()) return DiagonalProfile(a.dim());
  std::map<long, Matrix> window;
  for (const auto& [k, m] : a.window_) window.emplace(k, m * factor);
  return DiagonalProfile(factor * a.left_, factor * a.right_, a.left_bound_, a.right_bound_, std::move(window));
}

}  // namespace pdoc
