#include "doctest.h"

#include "oracle.hpp"
#include "pdoc/errors.hpp"
#include "pdoc/forms.hpp"
#include "pdoc/random.hpp"
#include "pdoc/symbols.hpp"

using namespace pdoc;

namespace {

FormalSymbol mult(long m, std::size_t depth = kDefaultSymbolDepth) {
  return symbol_of_multiplication(LaurentPoly::z(m), depth);
}

// Exact symbol of sum c z^m D^j: degree-j part has plus = sum c z^m, minus = (-1)^j sum c z^m.
FormalSymbol symbol_of(const oracle::DiffOp& op, std::size_t depth) {
  long order = 0;
  for (const auto& [k, c] : op) order = std::max(order, k.second);
  FormalSymbol out(1, order, depth);
  for (const auto& [k, c] : op) {
    const auto [m, j] = k;
    auto& part = out.part(j);
    part.plus.add_term(m, Matrix::scalar(1, c));
    part.minus.add_term(m, Matrix::scalar(1, j % 2 ? -c : c));
  }
  return out;
}

oracle::DiffOp random_diffop(Rng& rng, long max_order) {
  oracle::DiffOp out;
  const long terms = rng.uniform(1, 3);
  for (long t = 0; t < terms; ++t) out[{rng.uniform(-3, 3), rng.uniform(0, max_order)}] += random_coefficient(rng);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  if (out.empty()) out[{0, 0}] = 1;
  return out;
}

}  // namespace

TEST_SUITE("symbols") {
  TEST_CASE("star product reproduces differential operator composition exactly") {
    Rng rng(47);
    for (int s = 0; s < 40; ++s) {
      const auto a = random_diffop(rng, 2);
      const auto b = random_diffop(rng, 2);
      const auto expected = symbol_of(oracle::compose(a, b), 6);
      const auto actual = star_product(symbol_of(a, 6), symbol_of(b, 6), 6);
      CHECK(agree_to_depth(actual, expected));
    }
  }

  TEST_CASE("canonical commutation [D, z] = z") {
    const auto d = symbol_of_builtin("D");
    const auto z = mult(1);
    const auto c = symbol_subtract(star_product(d, z), star_product(z, d));
    CHECK(agree_to_depth(c, mult(1)));
    CHECK(c.at(0).plus == LaurentPoly::z(1));
    CHECK(c.at(0).minus == LaurentPoly::z(1));
  }

  TEST_CASE("built-in symbols") {
    const auto p = symbol_of_builtin("P_PLUS");
    CHECK(p.order() == 0);
    CHECK(p.at(0).plus == LaurentPoly::z(0));
    CHECK(p.at(0).minus.is_zero());
    CHECK(symbol_of_builtin("P_MINUS").at(0).minus == LaurentPoly::z(0));
    const auto d = symbol_of_builtin("D");
    CHECK(d.at(1).plus == LaurentPoly::z(0));
    CHECK(d.at(1).minus == -LaurentPoly::z(0));
    const auto abs_d = symbol_of_builtin("ABS_D");
    CHECK(abs_d.at(1).minus == LaurentPoly::z(0));
    const auto delta = symbol_of_builtin("DELTA");
    CHECK(delta.order() == 2);
    CHECK(agree_to_depth(star_product(d, d), delta));
    CHECK(agree_to_depth(star_product(abs_d, abs_d), delta));
    CHECK(symbol_of_multiplication(LaurentPoly::z(0)) == mult(0));
    CHECK_THROWS_AS(symbol_of_builtin("LOG"), UnknownBuiltin);
  }

  TEST_CASE("p+ symbol is idempotent and splits symbols") {
    const auto p = symbol_of_builtin("P_PLUS");
    const auto q = symbol_of_builtin("P_MINUS");
    CHECK(agree_to_depth(star_product(p, p), p));
    CHECK(symbol_p_plus(q).is_zero());
    CHECK(agree_to_depth(symbol_add(p, q), mult(0)));
    Rng rng(53);
    for (int s = 0; s < 15; ++s) {
      const auto a = random_symbol(rng, s % 2 ? 2 : 1, rng.uniform(-2, 2), 6, 3);
      const auto pa = symbol_p_plus(a);
      CHECK(agree_to_depth(symbol_add(pa, symbol_p_minus(a)), a));
      const auto pd = symbol_of_builtin("P_PLUS", a.dim());
      CHECK(agree_to_depth(star_product(pd, a), pa));
      CHECK(agree_to_depth(star_product(a, pd), pa));
    }
  }

  TEST_CASE("p+ and p- are algebra morphisms") {
    Rng rng(59);
    for (int s = 0; s < 15; ++s) {
      const auto a = random_symbol(rng, 1, rng.uniform(-2, 2), 6, 3);
      const auto b = random_symbol(rng, 1, rng.uniform(-2, 2), 6, 3);
      CHECK(agree_to_depth(symbol_p_plus(star_product(a, b)), star_product(symbol_p_plus(a), symbol_p_plus(b))));
      CHECK(agree_to_depth(symbol_p_minus(star_product(a, b)), star_product(symbol_p_minus(a), symbol_p_minus(b))));
    }
  }

  TEST_CASE("star product is associative to the computed depth") {
    Rng rng(61);
    for (int s = 0; s < 15; ++s) {
      const auto a = random_symbol(rng, 1, rng.uniform(-1, 1), 4, 3);
      const auto b = random_symbol(rng, 1, rng.uniform(-1, 1), 4, 3);
      const auto c = random_symbol(rng, 1, rng.uniform(-1, 1), 4, 3);
      CHECK(agree_to_depth(star_product(star_product(a, b, 4), c, 4), star_product(a, star_product(b, c, 4), 4)));
    }
  }

  TEST_CASE("xi-derivative convention on both half-lines") {
    PartialSymbol s{3, LaurentPoly::z(1), 2 * LaurentPoly::z(-1)};
    const auto ds = xi_derivative(s);
    CHECK(ds.degree == 2);
    CHECK(ds.plus == GaussianRational(3) * LaurentPoly::z(1));
    CHECK(ds.minus == GaussianRational(-6) * LaurentPoly::z(-1));
  }

  TEST_CASE("Wodzicki residue examples") {
    FormalSymbol a(1, -1, 1);
    a.part(-1).plus = LaurentPoly::z(0);
    a.part(-1).minus = LaurentPoly::z(0);
    CHECK(wodzicki_residue(a) == GaussianRational(2));
    FormalSymbol b(1, -1, 1);
    b.part(-1).plus = LaurentPoly::z(3);
    CHECK(wodzicki_residue(b).is_zero());
    CHECK(wodzicki_residue(mult(2, 6)).is_zero());  // order 0, degree -1 stored and zero
    CHECK_THROWS_AS(wodzicki_residue(mult(0, 1)), DepthInsufficient);
    FormalSymbol c(2, -1, 1);
    c.part(-1).plus = LaurentPoly::z(0, 2);
    CHECK(wodzicki_residue(c) == GaussianRational(2));
  }

  TEST_CASE("residue vanishes on star commutators") {
    Rng rng(67);
    for (int s = 0; s < 30; ++s) {
      const auto a = random_symbol(rng, s % 3 ? 1 : 2, rng.uniform(-2, 2), 6, 3);
      const auto b = random_symbol(rng, a.dim(), rng.uniform(-2, 2), 6, 3);
      CHECK(wodzicki_residue(star_commutator(a, b)).is_zero());
    }
  }

  TEST_CASE("log Laplacian bracket") {
    // x-independent symbols commute with log Delta
    CHECK(log_laplacian_bracket(symbol_of_builtin("D")).is_zero());
    CHECK(log_laplacian_bracket(mult(0)).is_zero());
    Rng rng(71);
    for (int s = 0; s < 10; ++s) {
      const long order = rng.uniform(-2, 2);
      const auto a = random_symbol(rng, 1, order, 6, 3);
      CHECK(log_laplacian_bracket(a).order() == order - 1);
    }
    // [z, log Delta]: alpha = 1 term is -(-i)(2/xi)(i z) = -2 z / xi
    const auto b = log_laplacian_bracket(mult(1));
    CHECK(b.at(-1).plus == GaussianRational(-2) * LaurentPoly::z(1));
    CHECK(b.at(-1).minus == GaussianRational(2) * LaurentPoly::z(1));
  }

  TEST_CASE("renormalized bracket trace matches the operator trace of [theta, theta]") {
    for (long m = 1; m <= 4; ++m) {
      const auto value = renormalized_bracket_trace(symbol_p_plus(mult(-m)), symbol_p_plus(mult(m)));
      const auto a = op_from_laurent(LaurentPoly::z(-m));
      const auto b = op_from_laurent(LaurentPoly::z(m));
      CHECK(value == trace(commutator(theta(a), theta(b))));
      const long n = 24;
      const auto p = oracle::plus(n);
      const auto model = oracle::shift(-m, n) * p * oracle::shift(m, n) * p - oracle::shift(m, n) * p * oracle::shift(-m, n) * p;
      CHECK(value == oracle::trace(model, 12));
      CHECK(value == GaussianRational(m));
    }
  }

  TEST_CASE("renormalized bracket trace: degenerate and antisymmetric cases") {
    CHECK(renormalized_bracket_trace(symbol_of_builtin("D"), symbol_of_builtin("P_PLUS")).is_zero());
    const auto x = symbol_p_plus(mult(2));
    CHECK(renormalized_bracket_trace(x, x).is_zero());
    Rng rng(73);
    for (int s = 0; s < 15; ++s) {
      const auto a = random_symbol(rng, 1, rng.uniform(-2, 2), 6, 3);
      const auto b = random_symbol(rng, 1, rng.uniform(-2, 2), 6, 3);
      CHECK(renormalized_bracket_trace(a, b) == -renormalized_bracket_trace(b, a));
    }
  }

  TEST_CASE("residue cocycle on shifts") {
    CHECK(radul_normalization() == GaussianRational(Rational(-1, 2)));
    for (long m = 1; m <= 5; ++m) {
      CHECK(radul_residue(mult(-m), mult(m)) == GaussianRational(-2 * m));
      CHECK(radul_cocycle(mult(-m), mult(m)) == GaussianRational(m));
      CHECK(radul_cocycle(mult(-m), mult(m), GaussianRational(1), kDefaultSymbolDepth) == GaussianRational(-2 * m));
    }
    for (long m = -3; m <= 3; ++m) {
      CHECK(radul_cocycle(mult(m), mult(m)).is_zero());
      for (long n = -3; n <= 3; ++n) {
        if (m + n != 0) CHECK(radul_cocycle(mult(m), mult(n)).is_zero());
      }
    }
  }

  TEST_CASE("depth bookkeeping") {
    Rng rng(79);
    const auto a = random_symbol(rng, 1, 1, 5, 2);
    CHECK(a.depth() == 5);
    CHECK(a.lowest_degree() == -3);
    CHECK(a.at(4).is_zero());
    CHECK_THROWS_AS(a.at(-4), DepthInsufficient);
    CHECK(a.truncated(2).depth() == 2);
    CHECK(star_product(a, mult(0, 3)).depth() == 3);
  }
}
