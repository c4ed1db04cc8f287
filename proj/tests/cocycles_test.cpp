#include "doctest.h"

#include "oracle.hpp"
#include "pdoc/cocycles.hpp"
#include "pdoc/errors.hpp"
#include "pdoc/random.hpp"

using namespace pdoc;

namespace {

LatticeOperator z(long m, std::size_t d = 1) { return op_from_laurent(LaurentPoly::z(m, d)); }
LatticeOperator zc(long m, const Matrix& c) { return op_from_laurent(LaurentPoly::monomial(m, c)); }

std::vector<LatticeOperator> random_tuple(Rng& rng, std::size_t n, std::size_t d, long degree, bool abs_d) {
  std::vector<LatticeOperator> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_sweep_element(rng, d, degree, abs_d).op);
  return out;
}

}  // namespace

TEST_SUITE("cocycles") {
  TEST_CASE("tr Omega on z^-m, z^m equals m, by structure and by brute force") {
    for (long m = 1; m <= 4; ++m) {
      const std::vector<LatticeOperator> args{z(-m), z(m)};
      const auto value = chern_cocycle(1, args);
      CHECK(value == GaussianRational(m));
      CHECK(oracle::chern({oracle::shift(-m, 20), oracle::shift(m, 20)}, 10) == value);
    }
  }

  TEST_CASE("tr Omega on z^-m (x) A, z^m (x) B equals m tr(AB)") {
    const Matrix a = Matrix::unit(2, 0, 1) + Matrix::scalar(2, GaussianRational(0, 1)) * Matrix::unit(2, 1, 1);
    Matrix b = Matrix::unit(2, 1, 0) * GaussianRational(3);
    b(0, 0) = GaussianRational(Rational(1, 2));
    b(1, 1) = GaussianRational(2, -1);
    for (long m = 1; m <= 3; ++m) {
      const std::vector<LatticeOperator> args{zc(-m, a), zc(m, b)};
      const auto value = chern_cocycle(1, args);
      CHECK(value == GaussianRational(m) * (a * b).trace());
      CHECK(oracle::chern({oracle::shift(-m, 16, a), oracle::shift(m, 16, b)}, 8) == value);
    }
  }

  TEST_CASE("tr Omega vanishes on shifts with nonzero total mode") {
    for (long m = -3; m <= 3; ++m) {
      for (long n = -3; n <= 3; ++n) {
        if (m + n == 0) continue;
        CHECK(chern_cocycle(1, std::vector<LatticeOperator>{z(m), z(n)}).is_zero());
      }
    }
  }

  TEST_CASE("tr Omega^2 matches brute force on small shift tuples") {
    const std::vector<std::array<long, 4>> tuples{{-2, 2, -3, 3}, {-1, 1, -2, 2}, {-1, 2, -3, 2}, {1, -3, 2, 0}};
    for (const auto& t : tuples) {
      std::vector<LatticeOperator> args;
      std::vector<oracle::Op> model;
      for (long m : t) {
        args.push_back(z(m));
        model.push_back(oracle::shift(m, 20));
      }
      CHECK(chern_cocycle(2, args) == oracle::chern(model, 10));
    }
  }

  TEST_CASE("tr Omega^2 vanishes at (-2, 2, -3, 3)") {
    // Brute-force value; the signed permutation rows cancel in pairs.
    const std::vector<LatticeOperator> args{z(-2), z(2), z(-3), z(3)};
    const auto eval = chern_cocycle_table(2, args);
    CHECK(eval.value.is_zero());
    REQUIRE(eval.terms.size() == 24);
    CHECK(eval.terms[0].trace == GaussianRational(2));  // identity permutation
    // permutation (0,3,1,2) is even and carries trace -2
    const auto odd_one = std::find_if(eval.terms.begin(), eval.terms.end(), [](const ChernTerm& t) {
      return t.permutation == std::vector<std::size_t>{0, 3, 1, 2};
    });
    REQUIRE(odd_one != eval.terms.end());
    CHECK(odd_one->sign == 1);
    CHECK(odd_one->trace == GaussianRational(-2));
  }

  TEST_CASE("chern cocycles are alternating") {
    Rng rng(29);
    for (int s = 0; s < 6; ++s) {
      auto a = random_tuple(rng, 2, 2, 3, true);
      const auto v = chern_cocycle(1, a);
      CHECK(chern_cocycle(1, std::vector<LatticeOperator>{a[1], a[0]}) == -v);
      CHECK(chern_cocycle(1, std::vector<LatticeOperator>{a[0], a[0]}).is_zero());
    }
    for (int s = 0; s < 3; ++s) {
      auto a = random_tuple(rng, 4, 1, 2, false);
      const auto v = chern_cocycle(2, a);
      CHECK(chern_cocycle(2, std::vector<LatticeOperator>{a[0], a[2], a[1], a[3]}) == -v);
      CHECK(chern_cocycle(2, std::vector<LatticeOperator>{a[0], a[1], a[2], a[0]}).is_zero());
    }
  }

  TEST_CASE("closedness on random tuples") {
    Rng rng(31);
    const auto c1 = chern_cochain(1);
    for (int s = 0; s < 20; ++s) CHECK(ce_coboundary(c1, random_tuple(rng, 3, s % 2 ? 2 : 1, 4, s % 3 == 0)).is_zero());
    const auto c2 = chern_cochain(2);
    for (int s = 0; s < 4; ++s) CHECK(ce_coboundary(c2, random_tuple(rng, 5, 1, 3, s == 0)).is_zero());
  }

  TEST_CASE("d^2 = 0 on a coboundary image") {
    // a -> tr(W a W) for a rank-two compression W is not a Lie morphism, so d1 != 0.
    const auto window = op_projection_zero() + z(1) * op_projection_zero() * z(-1);
    const ScalarCochain compress(1, [&](std::span<const LatticeOperator> a) { return trace(window * a[0] * window); }, false);
    const auto d1 = ce_differential(compress);
    const auto d2 = ce_differential(d1);
    Rng rng(37);
    bool some_nonzero = false;
    for (int s = 0; s < 10; ++s) {
      const auto a = random_tuple(rng, 3, 1, 2, false);
      CHECK(d2(a).is_zero());
      if (!d1(std::vector<LatticeOperator>{a[0], a[1]}).is_zero()) some_nonzero = true;
    }
    CHECK(some_nonzero);
  }

  TEST_CASE("a non-closed 2-cochain is detected") {
    // c(a, b) = f(a) g(b) - f(b) g(a) with f, g the diagonal entries at modes 0 and 1
    const auto p0 = op_projection_zero();
    const auto p1 = z(1) * p0 * z(-1);
    const ScalarCochain c(2, [&](std::span<const LatticeOperator> a) {
      return trace(p0 * a[0]) * trace(p1 * a[1]) - trace(p0 * a[1]) * trace(p1 * a[0]);
    }, true);
    Rng rng(41);
    bool detected = false;
    for (int s = 0; s < 20 && !detected; ++s) detected = !ce_coboundary(c, random_tuple(rng, 3, 1, 2, false)).is_zero();
    CHECK(detected);
  }

  TEST_CASE("Hochschild coboundary: cyclic end term on a hand example") {
    // c(a) = tr(p0 a): (bc)(a0, a1) = c(a0 a1) - c(a1 a0)
    const auto p0 = op_projection_zero();
    const ScalarCochain c(1, [&](std::span<const LatticeOperator> a) { return trace(p0 * a[0]); }, false);
    const std::vector<LatticeOperator> args{z(1), z(-1) * op_projection_plus()};
    CHECK(hochschild_coboundary(c, args) == trace(p0 * args[0] * args[1]) - trace(p0 * args[1] * args[0]));
    CHECK(hochschild_coboundary(c, args) == GaussianRational(-1));
    CHECK_THROWS_AS(hochschild_coboundary(c, std::vector<LatticeOperator>{z(1)}), std::invalid_argument);
  }

  TEST_CASE("Schwinger cocycle values") {
    CHECK(schwinger_cocycle(z(-1), z(1)) == GaussianRational(-1));
    for (long m = 1; m <= 4; ++m) {
      CHECK(schwinger_cocycle(z(-m), z(m)) == GaussianRational(-m));
      CHECK(oracle::schwinger(oracle::shift(-m, 16), oracle::shift(m, 16), 8) == GaussianRational(-m));
    }
    for (long m = -3; m <= 3; ++m) {
      CHECK(schwinger_cocycle(z(m), z(m)).is_zero());
      for (long n = -3; n <= 3; ++n) {
        if (m + n != 0) CHECK(schwinger_cocycle(z(m), z(n)).is_zero());
      }
    }
  }

  TEST_CASE("Schwinger cocycle is a 2-cocycle on Laurent triples") {
    Rng rng(43);
    const auto cs = schwinger_cochain();
    for (int s = 0; s < 20; ++s) {
      std::vector<LatticeOperator> a;
      for (int i = 0; i < 3; ++i) a.push_back(random_laurent(rng, s % 2 ? 2 : 1, 4).op);
      CHECK(ce_coboundary(cs, a).is_zero());
    }
  }

  TEST_CASE("off-diagonal blocks are finite rank even for unbounded operators") {
    // Each diagonal crosses the p+ boundary on finitely many modes, so block products
    // always pass the trace precondition and BlockNotTraceComputable stays a guard.
    const auto p = op_projection_plus();
    const auto q = LatticeOperator::identity() - p;
    const auto a = z(2) * op_derivative() * op_derivative() + op_abs_derivative() * z(-3);
    CHECK(finite_rank_support(p * a * q).has_value());
    CHECK(finite_rank_support(q * a * p).has_value());
    CHECK_NOTHROW(schwinger_cocycle(a, op_derivative() * z(-2)));
  }

  TEST_CASE("nonvanishing witness") {
    std::vector<LatticeOperator> family;
    for (long m = -3; m <= 3; ++m) family.push_back(z(m));
    const auto w1 = nonvanishing_witness(chern_cochain(1), std::vector<LatticeOperator>{z(-1), z(1)});
    REQUIRE(w1.has_value());
    CHECK(w1->indices == std::vector<std::size_t>{0, 1});
    CHECK(w1->value == GaussianRational(1));

    const ScalarCochain zero(2, [](std::span<const LatticeOperator>) { return GaussianRational(); }, true);
    CHECK_FALSE(nonvanishing_witness(zero, family).has_value());

    // tr Omega^2 vanishes on every 4-subset of this family (checked against brute force)
    CHECK_FALSE(nonvanishing_witness(chern_cochain(2), family).has_value());

    CHECK_THROWS_AS(nonvanishing_witness(chern_cochain(1), std::vector<LatticeOperator>{z(1), op_projection_plus()}),
                    NotCommuting);
  }

  TEST_CASE("every 4-subset of {z^m : |m| <= 3} gives zero by brute force") {
    std::vector<long> modes{-3, -2, -1, 0, 1, 2, 3};
    for (std::size_t a = 0; a < 7; ++a) {
      for (std::size_t b = a + 1; b < 7; ++b) {
        for (std::size_t c = b + 1; c < 7; ++c) {
          for (std::size_t d = c + 1; d < 7; ++d) {
            const std::vector<oracle::Op> args{oracle::shift(modes[a], 16), oracle::shift(modes[b], 16),
                                               oracle::shift(modes[c], 16), oracle::shift(modes[d], 16)};
            CHECK(oracle::chern(args, 8).is_zero());
          }
        }
      }
    }
  }
}
