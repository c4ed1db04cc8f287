#include "doctest.h"

#include "pdoc/errors.hpp"
#include "pdoc/index_poly.hpp"
#include "pdoc/laurent.hpp"
#include "pdoc/permutations.hpp"

using namespace pdoc;

TEST_SUITE("scalar") {
  TEST_CASE("rationals are stored in lowest terms with a positive denominator") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
    CHECK(to_string(parse_rational("-0/5")) == "0/1");
    CHECK(to_string(parse_rational("7")) == "7/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  }

  TEST_CASE("Gaussian rational field operations") {
    const GaussianRational a(Rational(1, 2), Rational(-3, 4));
    const GaussianRational b(2, 1);
    CHECK(a + b == GaussianRational(Rational(5, 2), Rational(1, 4)));
    CHECK(a * b == GaussianRational(Rational(7, 4), Rational(-1, 1)));
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == GaussianRational(Rational(13, 16)));
    CHECK(GaussianRational::imaginary_unit() * GaussianRational::imaginary_unit() == GaussianRational(-1));
    CHECK_THROWS(GaussianRational(1) / GaussianRational());
  }

  TEST_CASE("short scalar rendering") {
    CHECK(to_string(GaussianRational(3)) == "3");
    CHECK(to_string(GaussianRational(Rational(-1, 2))) == "-1/2");
    CHECK(to_string(GaussianRational(0, 1)) == "i");
    CHECK(to_string(GaussianRational(0, -2)) == "-2i");
    CHECK(to_string(GaussianRational(Rational(1, 3), Rational(-1, 2))) == "1/3-1/2i");
    CHECK(to_string(GaussianRational()) == "0");
  }

  TEST_CASE("powers of i cycle with period four") {
    for (long p = -8; p <= 8; ++p) {
      GaussianRational expected(1);
      const long steps = ((p % 4) + 4) % 4;
      for (long s = 0; s < steps; ++s) expected *= GaussianRational::imaginary_unit();
      CHECK(i_power(p) == expected);
    }
  }

  TEST_CASE("matrix algebra and dimension checks") {
    const auto e12 = Matrix::unit(2, 0, 1);
    const auto e21 = Matrix::unit(2, 1, 0);
    CHECK(e12 * e21 == Matrix::unit(2, 0, 0));
    CHECK((e12 * e21 - e21 * e12).trace() == GaussianRational());
    CHECK(Matrix::identity(3).trace() == GaussianRational(3));
    CHECK((e12 * e12).is_zero());
    CHECK_THROWS_AS(Matrix::identity(2) + Matrix::identity(3), DimensionMismatch);
    CHECK(to_string(e12) == "[0, 1; 0, 0]");
  }

  TEST_CASE("Laurent polynomials multiply by convolution and drop zero terms") {
    const auto z = LaurentPoly::z(1);
    const auto zinv = LaurentPoly::z(-1);
    CHECK(z * zinv == LaurentPoly::z(0));
    const auto p = z + zinv;
    const auto sq = p * p;
    CHECK(sq.coeff(2) == Matrix::identity(1));
    CHECK(sq.coeff(0) == Matrix::scalar(1, 2));
    CHECK(sq.coeff(-2) == Matrix::identity(1));
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 1);
  }

  TEST_CASE("x-derivative multiplies mode m by i m") {
    LaurentPoly p(1);
    p.add_term(3, Matrix::identity(1));
    p.add_term(-2, Matrix::scalar(1, 5));
    p.add_term(0, Matrix::identity(1));
    const auto dp = p.derivative();
    CHECK(dp.coeff(3) == Matrix::scalar(1, GaussianRational(0, 3)));
    CHECK(dp.coeff(-2) == Matrix::scalar(1, GaussianRational(0, -10)));
    CHECK(dp.coeffs().count(0) == 0);
  }

  TEST_CASE("index polynomials: evaluation, shift, trace test") {
    // p(k) = 1 + 2k + k^2
    IndexPoly p(1, {Matrix::identity(1), Matrix::scalar(1, 2), Matrix::identity(1)});
    for (long k = -4; k <= 4; ++k) {
      CHECK(p(k) == Matrix::scalar(1, (k + 1) * (k + 1)));
      CHECK(p.shifted(3)(k) == p(k + 3));
    }
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.trace_is_zero());
    const IndexPoly traceless = IndexPoly::linear(Matrix::unit(2, 0, 0) - Matrix::unit(2, 1, 1));
    CHECK(traceless.trace_is_zero());
    CHECK_FALSE(traceless.is_zero());
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
  }

  TEST_CASE("signed permutations are lexicographic with inversion-parity signs") {
    const auto perms = signed_permutations(3);
    REQUIRE(perms.size() == 6);
    CHECK(perms.front().image == std::vector<std::size_t>{0, 1, 2});
    CHECK(perms.back().image == std::vector<std::size_t>{2, 1, 0});
    const int expected[] = {1, -1, -1, 1, 1, -1};
    for (std::size_t i = 0; i < perms.size(); ++i) CHECK(perms[i].sign == expected[i]);
    CHECK(signed_permutations(4).size() == 24);
    CHECK(factorial(6) == 720);
    CHECK(factorial(0) == 1);
  }
}
