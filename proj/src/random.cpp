#include "pdoc/random.hpp"

#include <limits>

namespace pdoc {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % range);
}

namespace {

std::string rational_expr(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string coefficient_expr(const GaussianRational& c) {
  std::string out = "(" + rational_expr(c.re());
  if (!c.is_real()) out += (sgn(c.im()) < 0 ? "-" : "+") + rational_expr(abs(c.im())) + "*i";
  return out + ")";
}

std::string unit_expr(std::size_t dim, std::size_t i, std::size_t j) {
  if (dim == 1) return "";
  return "*E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string z_expr(long m) { return "z^" + std::to_string(m); }

}  // namespace

GaussianRational random_coefficient(Rng& rng, bool complex) {
  while (true) {
    GaussianRational c(rng.uniform(-3, 3), complex && rng.uniform(0, 2) == 0 ? rng.uniform(-2, 2) : 0);
    if (!c.is_zero()) return c;
  }
}

Sample random_laurent(Rng& rng, std::size_t dim, long degree, int max_terms) {
  LaurentPoly p(dim);
  std::string expr;
  const long terms = rng.uniform(1, max_terms);
  for (long t = 0; t < terms; ++t) {
    const auto c = random_coefficient(rng);
    const long m = rng.uniform(-degree, degree);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    p.add_term(m, Matrix::unit(dim, i, j) * c);
    expr += (t ? " + " : "") + coefficient_expr(c) + "*" + z_expr(m) + unit_expr(dim, i, j);
  }
  return {op_from_laurent(p), expr};
}

Sample random_sweep_element(Rng& rng, std::size_t dim, long degree, bool include_abs_d) {
  LatticeOperator op(dim);
  std::string expr;
  const long terms = rng.uniform(1, 3);
  const long kinds = include_abs_d ? 4 : 3;
  for (long t = 0; t < terms; ++t) {
    const auto c = random_coefficient(rng);
    const long m = rng.uniform(-degree, degree);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    const auto mult = op_from_laurent(LaurentPoly::monomial(m, Matrix::unit(dim, i, j) * c));
    std::string term;
    switch (rng.uniform(0, kinds - 1)) {
      case 0:
        op = op + mult;
        term = coefficient_expr(c) + "*" + z_expr(m) + unit_expr(dim, i, j);
        break;
      case 1:
        op = op + c * op_derivative(dim);
        term = coefficient_expr(c) + "*D";
        break;
      case 2:
        op = op + mult * op_derivative(dim);
        term = coefficient_expr(c) + "*" + z_expr(m) + unit_expr(dim, i, j) + "*D";
        break;
      default:
        op = op + c * op_abs_derivative(dim);
        term = coefficient_expr(c) + "*ABS_D";
        break;
    }
    expr += (t ? " + " : "") + term;
  }
  return {op, expr};
}

Sample random_finite_rank(Rng& rng, std::size_t dim, long radius) {
  LatticeOperator op(dim);
  std::string expr;
  const long entries = rng.uniform(1, 4);
  for (long t = 0; t < entries; ++t) {
    const auto c = random_coefficient(rng);
    const long source = rng.uniform(-radius, radius);
    const long target = rng.uniform(-radius, radius);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    std::map<long, DiagonalProfile> diag;
    diag.emplace(target - source, DiagonalProfile::finite(dim, {{source, Matrix::unit(dim, i, j) * c}}));
    op = op + LatticeOperator(dim, std::move(diag));
    // e_source -> e_target through the constant mode
    expr += (t ? " + " : "") + coefficient_expr(c) + "*" + z_expr(target) + "*P_ZERO*" + z_expr(-source) +
            unit_expr(dim, i, j);
  }
  return {op, expr};
}

Sample random_generator_word(Rng& rng, std::size_t dim, long degree) {
  auto generator = [&]() -> Sample {
    switch (rng.uniform(0, 6)) {
      case 0: {
        const long m = rng.uniform(-degree, degree);
        return {op_from_laurent(LaurentPoly::z(m, dim)), z_expr(m)};
      }
      case 1: return {op_projection_plus(dim), "P_PLUS"};
      case 2: return {op_projection_minus(dim), "P_MINUS"};
      case 3: return {op_projection_zero(dim), "P_ZERO"};
      case 4: return {op_derivative(dim), "D"};
      case 5: return {op_abs_derivative(dim), "ABS_D"};
      default: {
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
        const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
        if (dim == 1) return {LatticeOperator::identity(1), "I"};
        return {op_constant(Matrix::unit(dim, i, j)), "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
      }
    }
  };
  auto word = [&]() -> Sample {
    const auto c = random_coefficient(rng);
    Sample s{c * LatticeOperator::identity(dim), coefficient_expr(c)};
    const long length = rng.uniform(1, 3);
    for (long l = 0; l < length; ++l) {
      auto g = generator();
      s.op = s.op * g.op;
      s.expr += "*" + g.expr;
    }
    return s;
  };
  Sample out = word();
  if (rng.coin()) {
    auto second = word();
    out.op = out.op + second.op;
    out.expr += " + " + second.expr;
  }
  return out;
}

FormalSymbol random_symbol(Rng& rng, std::size_t dim, long order, std::size_t depth, long degree) {
  FormalSymbol out(dim, order, depth);
  auto random_poly = [&]() {
    LaurentPoly p(dim);
    const long terms = rng.uniform(0, 2);
    for (long t = 0; t < terms; ++t) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
      const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
      p.add_term(rng.uniform(-degree, degree), Matrix::unit(dim, i, j) * random_coefficient(rng));
    }
    return p;
  };
  for (long deg = order; deg >= out.lowest_degree(); --deg) {
    out.part(deg).plus = random_poly();
    out.part(deg).minus = random_poly();
  }
  return out;
}

}  // namespace pdoc
