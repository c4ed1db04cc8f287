#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pdoc/lattice_operator.hpp"
#include "pdoc/symbols.hpp"

namespace pdoc {

/// Seeded generator with a portable integer draw (std::uniform_int_distribution is
/// implementation-defined, and reports must be byte-identical for a fixed seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// An operator together with an expression that reproduces it in the operator grammar.
struct Sample {
  LatticeOperator op;
  std::string expr;
};

/// Nonzero small Gaussian-integer coefficient; `complex` enables imaginary parts.
GaussianRational random_coefficient(Rng& rng, bool complex = true);

/// 1..max_terms terms c z^m E_ij with |m| <= degree.
Sample random_laurent(Rng& rng, std::size_t dim, long degree, int max_terms = 3);

/// Element of span{z^m (x) E_ij, D, z^m (x) E_ij o D} (plus |D| when include_abs_d).
Sample random_sweep_element(Rng& rng, std::size_t dim, long degree, bool include_abs_d = false);

/// Finite-rank operator supported on modes [-radius, radius].
Sample random_finite_rank(Rng& rng, std::size_t dim, long radius);

/// Product or sum of generators z^m, P_PLUS, P_MINUS, P_ZERO, D, ABS_D, E_ij.
Sample random_generator_word(Rng& rng, std::size_t dim, long degree);

/// Random classical symbol of the given order with every stored part populated.
FormalSymbol random_symbol(Rng& rng, std::size_t dim, long order, std::size_t depth, long degree);

}  // namespace pdoc
