#include "doctest.h"

#include "oracle.hpp"
#include "pdoc/errors.hpp"
#include "pdoc/lattice_operator.hpp"
#include "pdoc/random.hpp"

using namespace pdoc;

namespace {

LatticeOperator z(long m, std::size_t d = 1) { return op_from_laurent(LaurentPoly::z(m, d)); }

// Library operator vs brute-force model on target/source modes within [-inner, inner].
bool agrees(const LatticeOperator& a, const oracle::Op& o, long inner) {
  const auto d = static_cast<long>(a.dim());
  for (long t = -inner; t <= inner; ++t) {
    for (long s = -inner; s <= inner; ++s) {
      const auto m = a.entry(t, s);
      for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
          if (!(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == o.at(t, i, s, j))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("Laurent multiplication shifts modes") {
    CHECK(apply(z(1), 0, {1}) == ModeVector{{1, {1}}});
    CHECK(op_from_laurent(LaurentPoly::z(0)) == LatticeOperator::identity());
    CHECK(z(-2) * z(2) == LatticeOperator::identity());
    for (long m = -3; m <= 3; ++m) {
      for (long n = -3; n <= 3; ++n) CHECK(z(m) * z(n) == z(m + n));
    }
  }

  TEST_CASE("spectral projections") {
    const auto p = op_projection_plus();
    const auto q = op_projection_minus();
    const auto e0 = op_projection_zero();
    CHECK(apply(p, 0, {1}).empty());
    CHECK(apply(p, 1, {1}) == ModeVector{{1, {1}}});
    CHECK(p * p == p);
    CHECK(q * q == q);
    CHECK(e0 * e0 == e0);
    CHECK(p + q + e0 == LatticeOperator::identity());
    CHECK((p * q).is_zero());
  }

  TEST_CASE("D and |D| act diagonally") {
    CHECK(apply(op_derivative(), 3, {1}) == ModeVector{{3, {3}}});
    CHECK(apply(op_abs_derivative(), -2, {1}) == ModeVector{{-2, {2}}});
    CHECK(apply(op_abs_derivative(), 0, {1}).empty());
    CHECK(commutator(op_derivative(), op_projection_plus()).is_zero());
    CHECK(op_abs_derivative() * op_abs_derivative() == op_derivative() * op_derivative());
    for (long m = -3; m <= 3; ++m) CHECK(commutator(op_derivative(), z(m)) == GaussianRational(m) * z(m));
  }

  TEST_CASE("[z, p+] is the rank-one map e0 -> -e1") {
    const auto c = commutator(z(1), op_projection_plus());
    for (long k = -3; k <= 3; ++k) {
      const auto image = apply(c, k, {1});
      if (k == 0) {
        CHECK(image == ModeVector{{1, {-1}}});
      } else {
        CHECK(image.empty());
      }
    }
    CHECK(exact_rank(c) == std::optional<std::size_t>(1));
  }

  TEST_CASE("canonical form: equal functions give equal profiles") {
    // |k| built two ways
    const auto a = op_abs_derivative();
    const auto b = op_derivative() * (op_projection_plus() - op_projection_minus());
    CHECK(a == b);
    const auto& prof = *a.diagonal(0);
    CHECK(prof.left_bound() == 0);
    CHECK(prof.right_bound() == 1);
    CHECK(prof.window().empty());
    // single polynomial everywhere
    const auto& dprof = *op_derivative().diagonal(0);
    CHECK(dprof.left_bound() == -1);
    CHECK(dprof.right_bound() == 0);
    // subtracting to zero removes the diagonal entirely
    CHECK((a - b).is_zero());
    CHECK((a - b).diagonals().empty());
  }

  TEST_CASE("finite-window profiles keep only nonzero entries") {
    const auto f = DiagonalProfile::finite(1, {{2, Matrix::identity(1)}, {5, Matrix::zero(1)}});
    CHECK(f.is_finite());
    CHECK(f.window().size() == 1);
    CHECK(f(2) == Matrix::identity(1));
    CHECK(f(5).is_zero());
    CHECK(f.shifted(1)(1) == Matrix::identity(1));
  }

  TEST_CASE("finite_rank_support") {
    for (long m = -4; m <= 4; ++m) {
      const auto c = commutator(z(m), op_projection_plus());
      const auto support = finite_rank_support(c);
      REQUIRE(support.has_value());
      if (m != 0) {
        CHECK(support->source.lo >= -std::abs(m));
        CHECK(support->source.hi <= std::abs(m));
        CHECK(support->target.lo >= -std::abs(m));
        CHECK(support->target.hi <= std::abs(m));
      }
    }
    // generic Laurent polynomial
    LaurentPoly a(1);
    a.add_term(-2, Matrix::scalar(1, 3));
    a.add_term(1, Matrix::scalar(1, GaussianRational(0, 1)));
    const auto sa = finite_rank_support(commutator(op_from_laurent(a), op_projection_plus()));
    REQUIRE(sa.has_value());
    CHECK(sa->source.lo >= -2);
    CHECK(sa->target.hi <= 2);
    CHECK_FALSE(finite_rank_support(op_derivative()).has_value());
    const auto zero = finite_rank_support(LatticeOperator::zero());
    REQUIRE(zero.has_value());
    CHECK(zero->source.empty());
    CHECK(zero->rank_bound == 0);
  }

  TEST_CASE("trace and its precondition") {
    CHECK_THROWS_AS(trace(LatticeOperator::identity()), NotTraceComputable);
    CHECK_THROWS_AS(trace(op_derivative()), NotTraceComputable);
    CHECK_THROWS_AS(trace(op_projection_plus()), NotTraceComputable);
    CHECK(trace(op_projection_zero(3)) == GaussianRational(3));
    CHECK(trace(z(2)) == GaussianRational());
    // pointwise traceless tail: [E12, E21] (x) D has trace-free tails
    const auto e12 = op_constant(Matrix::unit(2, 0, 1));
    const auto e21 = op_constant(Matrix::unit(2, 1, 0));
    CHECK(trace(commutator(e12, e21) * op_derivative(2)) == GaussianRational());
  }

  TEST_CASE("trace of a commutator with a finite-rank operator vanishes") {
    Rng rng(3);
    for (int s = 0; s < 20; ++s) {
      const auto f = random_finite_rank(rng, 1, 3);
      CHECK(trace(commutator(f.op, op_derivative())) == GaussianRational());
      CHECK(trace(commutator(f.op, op_abs_derivative())) == GaussianRational());
    }
  }

  TEST_CASE("dense windows") {
    const auto w = dense_window(op_projection_plus(), 1);
    CHECK(w(0, 0) == GaussianRational());
    CHECK(w(1, 1) == GaussianRational());
    CHECK(w(2, 2) == GaussianRational(1));
    const auto s = dense_window(z(1), 3);
    for (std::size_t r = 0; r < 7; ++r) {
      for (std::size_t c = 0; c < 7; ++c) CHECK(s(r, c) == GaussianRational(r == c + 1 ? 1 : 0));
    }
  }

  TEST_CASE("curvature of z^-3, z^3 has trace 3 by window summation") {
    const auto p = op_projection_plus();
    const auto a = z(-3);
    const auto b = z(3);
    const auto omega = a * p * b * p - b * p * a * p;
    const auto w = dense_window(omega, 10);
    CHECK(w.trace() == GaussianRational(3));
    CHECK(trace(omega) == GaussianRational(3));
  }

  TEST_CASE("structural operators agree with the brute-force model") {
    const long n = 16;
    CHECK(agrees(op_projection_plus(), oracle::plus(n), 8));
    CHECK(agrees(op_projection_minus(), oracle::minus(n), 8));
    CHECK(agrees(op_abs_derivative(), oracle::abs_deriv(n), 8));
    const auto model = oracle::shift(2, n) * oracle::plus(n) * oracle::deriv(n) - oracle::abs_deriv(n) * oracle::shift(-1, n);
    const auto op = z(2) * op_projection_plus() * op_derivative() - op_abs_derivative() * z(-1);
    CHECK(agrees(op, model, 8));
    const auto e12 = Matrix::unit(2, 0, 1);
    const auto model2 = oracle::shift(1, n, e12) * oracle::plus(n, 2) * oracle::shift(-2, n, Matrix::identity(2));
    const auto op2 = op_from_laurent(LaurentPoly::monomial(1, e12)) * op_projection_plus(2) * z(-2, 2);
    CHECK(agrees(op2, model2, 8));
  }

  TEST_CASE("composition is associative and matches window products on random words") {
    Rng rng(19);
    for (int s = 0; s < 40; ++s) {
      const std::size_t d = s % 2 ? 2 : 1;
      const auto a = random_generator_word(rng, d, 3).op;
      const auto b = random_generator_word(rng, d, 3).op;
      const auto c = random_generator_word(rng, d, 3).op;
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      const long spread = std::max({diagonal_spread(a), diagonal_spread(b), 1L});
      const long n = 3 * spread;
      const auto inner = static_cast<std::size_t>((2 * (n - 2 * spread) + 1) * static_cast<long>(d));
      const auto start = static_cast<std::size_t>(2 * spread * static_cast<long>(d));
      CHECK((dense_window(a * b, n).block(start, start, inner, inner)) ==
            (dense_window(a, n) * dense_window(b, n)).block(start, start, inner, inner));
    }
  }

  TEST_CASE("trace is cyclic when one factor has finite rank") {
    Rng rng(23);
    for (int s = 0; s < 20; ++s) {
      const auto f = random_finite_rank(rng, 2, 2).op;
      const auto b = random_sweep_element(rng, 2, 3, true).op;
      CHECK(trace(f * b) == trace(b * f));
    }
  }

  TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(z(1, 1) * z(1, 2), DimensionMismatch);
    CHECK_THROWS_AS(z(1, 1) + z(1, 2), DimensionMismatch);
  }
}
