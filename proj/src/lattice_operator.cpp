#include "pdoc/lattice_operator.hpp"

#include <algorithm>
#include <cstdlib>

#include "pdoc/errors.hpp"

namespace pdoc {

LatticeOperator::LatticeOperator(std::size_t dim, std::map<long, DiagonalProfile> diagonals)
    : dim_(dim), diagonals_(std::move(diagonals)) {
  for (const auto& [j, profile] : diagonals_) require_same_dim(dim_, profile.dim(), "LatticeOperator diagonal");
  std::erase_if(diagonals_, [](const auto& kv) { return kv.second.is_zero(); });
}

LatticeOperator LatticeOperator::identity(std::size_t dim) { return op_constant(Matrix::identity(dim)); }

const DiagonalProfile* LatticeOperator::diagonal(long offset) const {
  auto it = diagonals_.find(offset);
  return it == diagonals_.end() ? nullptr : &it->second;
}

Matrix LatticeOperator::entry(long target, long source) const {
  const auto* profile = diagonal(target - source);
  return profile ? (*profile)(source) : Matrix::zero(dim_);
}

LatticeOperator op_from_laurent(const LaurentPoly& p) {
  std::map<long, DiagonalProfile> diagonals;
  for (const auto& [m, c] : p.coeffs()) diagonals.emplace(m, DiagonalProfile::constant(c));
  return LatticeOperator(p.dim(), std::move(diagonals));
}

LatticeOperator op_constant(const Matrix& m) { return op_from_laurent(LaurentPoly::constant(m)); }

LatticeOperator op_projection_plus(std::size_t dim) {
  DiagonalProfile profile(IndexPoly(dim), IndexPoly::constant(Matrix::identity(dim)), 0, 1);
  return LatticeOperator(dim, {{0, std::move(profile)}});
}

LatticeOperator op_projection_minus(std::size_t dim) {
  DiagonalProfile profile(IndexPoly::constant(Matrix::identity(dim)), IndexPoly(dim), -1, 0);
  return LatticeOperator(dim, {{0, std::move(profile)}});
}

LatticeOperator op_projection_zero(std::size_t dim) {
  return LatticeOperator(dim, {{0, DiagonalProfile::finite(dim, {{0, Matrix::identity(dim)}})}});
}

LatticeOperator op_derivative(std::size_t dim) {
  return LatticeOperator(dim, {{0, DiagonalProfile::polynomial(IndexPoly::linear(Matrix::identity(dim)))}});
}

LatticeOperator op_abs_derivative(std::size_t dim) {
  const Matrix id = Matrix::identity(dim);
  DiagonalProfile profile(IndexPoly::linear(-id), IndexPoly::linear(id), 0, 1);
  return LatticeOperator(dim, {{0, std::move(profile)}});
}

namespace {

void accumulate(std::map<long, DiagonalProfile>& into, long offset, DiagonalProfile term) {
  auto [it, inserted] = into.try_emplace(offset, term);
  if (!inserted) it->second = it->second + term;
}

}  // namespace

LatticeOperator compose(const LatticeOperator& a, const LatticeOperator& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  // (AB)_j(k) = sum_{j1 + j2 = j} A_{j1}(k + j2) B_{j2}(k)
  std::map<long, DiagonalProfile> out;
  for (const auto& [j2, pb] : b.diagonals()) {
    for (const auto& [j1, pa] : a.diagonals()) accumulate(out, j1 + j2, pa.shifted(j2) * pb);
  }
  return LatticeOperator(a.dim(), std::move(out));
}

LatticeOperator add(const LatticeOperator& a, const LatticeOperator& b) {
  require_same_dim(a.dim(), b.dim(), "add");
  auto out = a.diagonals();
  for (const auto& [j, p] : b.diagonals()) accumulate(out, j, p);
  return LatticeOperator(a.dim(), std::move(out));
}

LatticeOperator subtract(const LatticeOperator& a, const LatticeOperator& b) { return add(a, scale(-1, b)); }

LatticeOperator scale(const GaussianRational& factor, const LatticeOperator& a) {
  std::map<long, DiagonalProfile> out;
  if (factor.is_zero()) return LatticeOperator(a.dim());
  for (const auto& [j, p] : a.diagonals()) out.emplace(j, factor * p);
  return LatticeOperator(a.dim(), std::move(out));
}

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) {
  return subtract(compose(a, b), compose(b, a));
}

std::optional<FiniteRankSupport> finite_rank_support(const LatticeOperator& a) {
  FiniteRankSupport support;
  bool first = true;
  for (const auto& [j, p] : a.diagonals()) {
    if (!p.is_finite()) return std::nullopt;
    for (const auto& [k, m] : p.window()) {
      if (first) {
        support.source = {k, k};
        support.target = {k + j, k + j};
        first = false;
      }
      support.source.lo = std::min(support.source.lo, k);
      support.source.hi = std::max(support.source.hi, k);
      support.target.lo = std::min(support.target.lo, k + j);
      support.target.hi = std::max(support.target.hi, k + j);
    }
  }
  if (!first) {
    support.rank_bound =
        static_cast<std::size_t>(std::min(support.source.size(), support.target.size())) * a.dim();
  }
  return support;
}

std::optional<std::size_t> exact_rank(const LatticeOperator& a) {
  const auto support = finite_rank_support(a);
  if (!support) return std::nullopt;
  if (support->source.empty()) return 0;
  const std::size_t d = a.dim();
  DenseMatrix block(static_cast<std::size_t>(support->target.size()) * d,
                    static_cast<std::size_t>(support->source.size()) * d);
  for (const auto& [j, p] : a.diagonals()) {
    for (const auto& [k, m] : p.window()) {
      const auto row0 = static_cast<std::size_t>(k + j - support->target.lo) * d;
      const auto col0 = static_cast<std::size_t>(k - support->source.lo) * d;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) block(row0 + r, col0 + c) = m(r, c);
      }
    }
  }
  return block.rank();
}

GaussianRational trace(const LatticeOperator& a) {
  const auto* main = a.diagonal(0);
  if (!main) return 0;
  if (!main->left().trace_is_zero() || !main->right().trace_is_zero()) {
    throw NotTraceComputable("trace: main diagonal has a tail with nonzero scalar trace");
  }
  GaussianRational sum;
  for (long k = main->left_bound() + 1; k < main->right_bound(); ++k) sum += (*main)(k).trace();
  return sum;
}

ModeVector apply(const LatticeOperator& a, long mode, const std::vector<GaussianRational>& v) {
  if (v.size() != a.dim()) throw DimensionMismatch("apply: vector size does not match operator dimension");
  ModeVector out;
  for (const auto& [j, p] : a.diagonals()) {
    const Matrix m = p(mode);
    std::vector<GaussianRational> w(a.dim());
    bool nonzero = false;
    for (std::size_t r = 0; r < a.dim(); ++r) {
      for (std::size_t c = 0; c < a.dim(); ++c) w[r] += m(r, c) * v[c];
      nonzero = nonzero || !w[r].is_zero();
    }
    if (nonzero) out.emplace(mode + j, std::move(w));
  }
  return out;
}

DenseMatrix dense_window(const LatticeOperator& a, long half_width) {
  if (half_width < 0) throw std::invalid_argument("dense_window: half width must be >= 0");
  const std::size_t d = a.dim();
  const auto modes = static_cast<std::size_t>(2 * half_width + 1);
  DenseMatrix out(modes * d, modes * d);
  for (const auto& [j, p] : a.diagonals()) {
    for (long source = -half_width; source <= half_width; ++source) {
      const long target = source + j;
      if (target < -half_width || target > half_width) continue;
      const Matrix m = p(source);
      const auto row0 = static_cast<std::size_t>(target + half_width) * d;
      const auto col0 = static_cast<std::size_t>(source + half_width) * d;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) out(row0 + r, col0 + c) = m(r, c);
      }
    }
  }
  return out;
}

long diagonal_spread(const LatticeOperator& a) {
  long spread = 0;
  for (const auto& [j, p] : a.diagonals()) spread = std::max(spread, std::labs(j));
  return spread;
}

}  // namespace pdoc
