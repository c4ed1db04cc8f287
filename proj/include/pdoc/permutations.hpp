#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pdoc {

struct SignedPermutation {
  std::vector<std::size_t> image;  // s(0), ..., s(n-1)
  int sign = 1;
};

/// All n! permutations of {0..n-1} in lexicographic order, with their signs.
std::vector<SignedPermutation> signed_permutations(std::size_t n);

/// Sign via inversion parity.
int permutation_sign(std::span<const std::size_t> image);

unsigned long factorial(unsigned n);

}  // namespace pdoc
