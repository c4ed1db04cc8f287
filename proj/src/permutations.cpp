#include "pdoc/permutations.hpp"

#include <algorithm>
#include <numeric>

namespace pdoc {

int permutation_sign(std::span<const std::size_t> image) {
  int sign = 1;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] > image[j]) sign = -sign;
    }
  }
  return sign;
}

std::vector<SignedPermutation> signed_permutations(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<SignedPermutation> out;
  out.reserve(factorial(static_cast<unsigned>(n)));
  do {
    out.push_back({image, permutation_sign(image)});
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

unsigned long factorial(unsigned n) {
  unsigned long f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace pdoc
