#include "pdoc/cocycles.hpp"

#include <string>

#include "pdoc/errors.hpp"

namespace pdoc {

ChernEvaluation chern_cocycle_table(unsigned k, std::span<const LatticeOperator> args) {
  if (k == 0) throw std::invalid_argument("chern_cocycle: k must be positive");
  const std::size_t n = 2 * static_cast<std::size_t>(k);
  if (args.size() != n) {
    throw std::invalid_argument("chern_cocycle: expected " + std::to_string(n) + " arguments, got " +
                                std::to_string(args.size()));
  }
  const std::size_t d = args.front().dim();
  // Omega is antisymmetric, so each unordered pair is computed once.
  std::vector<std::vector<LatticeOperator>> omega(n, std::vector<LatticeOperator>(n, LatticeOperator(d)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      omega[i][j] = curvature(args[i], args[j]);
      omega[j][i] = -omega[i][j];
    }
  }
  ChernEvaluation out;
  for (const auto& s : signed_permutations(n)) {
    LatticeOperator product = omega[s.image[0]][s.image[1]];
    for (std::size_t pos = 2; pos < n && !product.is_zero(); pos += 2) {
      product = compose(product, omega[s.image[pos]][s.image[pos + 1]]);
    }
    ChernTerm term{s.image, s.sign, trace(product)};
    if (s.sign > 0) {
      out.value += term.trace;
    } else {
      out.value -= term.trace;
    }
    out.terms.push_back(std::move(term));
  }
  out.value /= GaussianRational(Rational(factorial(static_cast<unsigned>(n))));
  return out;
}

GaussianRational chern_cocycle(unsigned k, std::span<const LatticeOperator> args) {
  return chern_cocycle_table(k, args).value;
}

ScalarCochain chern_cochain(unsigned k) {
  return ScalarCochain(2 * k, [k](std::span<const LatticeOperator> a) { return chern_cocycle(k, a); }, true);
}

GaussianRational ce_coboundary(const ScalarCochain& c, std::span<const LatticeOperator> args) {
  if (args.size() != c.arity() + 1) {
    throw std::invalid_argument("ce_coboundary: expected " + std::to_string(c.arity() + 1) + " arguments");
  }
  GaussianRational sum;
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      const auto value = c(bracket_and_omit(args, i, j));
      if ((i + j) % 2 == 0) {
        sum += value;
      } else {
        sum -= value;
      }
    }
  }
  return sum;
}

ScalarCochain ce_differential(const ScalarCochain& c) {
  return ScalarCochain(c.arity() + 1, [c](std::span<const LatticeOperator> a) { return ce_coboundary(c, a); },
                       c.skew());
}

GaussianRational hochschild_coboundary(const ScalarCochain& c, std::span<const LatticeOperator> args) {
  const std::size_t p = c.arity();
  if (args.size() != p + 1) {
    throw std::invalid_argument("hochschild_coboundary: expected " + std::to_string(p + 1) + " arguments");
  }
  GaussianRational sum;
  std::vector<LatticeOperator> slot;
  slot.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    slot.clear();
    for (std::size_t l = 0; l < i; ++l) slot.push_back(args[l]);
    slot.push_back(compose(args[i], args[i + 1]));
    for (std::size_t l = i + 2; l <= p; ++l) slot.push_back(args[l]);
    const auto value = c(slot);
    if (i % 2 == 0) {
      sum += value;
    } else {
      sum -= value;
    }
  }
  slot.clear();
  slot.push_back(compose(args[p], args[0]));
  for (std::size_t l = 1; l < p; ++l) slot.push_back(args[l]);
  const auto value = c(slot);
  if (p % 2 == 0) {
    sum += value;
  } else {
    sum -= value;
  }
  return sum;
}

GaussianRational schwinger_cocycle(const LatticeOperator& a, const LatticeOperator& b) {
  require_same_dim(a.dim(), b.dim(), "schwinger_cocycle");
  const auto plus = op_projection_plus(a.dim());
  const auto minus = LatticeOperator::identity(a.dim()) - plus;
  const auto a_pm = plus * a * minus;
  const auto a_mp = minus * a * plus;
  const auto b_pm = plus * b * minus;
  const auto b_mp = minus * b * plus;
  try {
    return trace(a_pm * b_mp) - trace(b_pm * a_mp);
  } catch (const NotTraceComputable& e) {
    throw BlockNotTraceComputable(std::string("schwinger_cocycle: ") + e.what());
  }
}

ScalarCochain schwinger_cochain() {
  return ScalarCochain(2, [](std::span<const LatticeOperator> a) { return schwinger_cocycle(a[0], a[1]); }, true);
}

std::optional<Witness> nonvanishing_witness(const ScalarCochain& c, std::span<const LatticeOperator> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!commutator(family[i], family[j]).is_zero()) {
        throw NotCommuting("nonvanishing_witness: family members " + std::to_string(i) + " and " + std::to_string(j) +
                           " do not commute");
      }
    }
  }
  const std::size_t p = c.arity();
  if (p > family.size()) return std::nullopt;
  std::vector<std::size_t> idx(p);
  for (std::size_t i = 0; i < p; ++i) idx[i] = i;
  std::vector<LatticeOperator> args(p);
  while (true) {
    for (std::size_t i = 0; i < p; ++i) args[i] = family[idx[i]];
    auto value = c(args);
    if (!value.is_zero()) return Witness{idx, std::move(value)};
    // next combination
    std::size_t pos = p;
    while (pos > 0 && idx[pos - 1] == family.size() - p + pos - 1) --pos;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < p; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace pdoc
