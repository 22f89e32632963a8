#pragma once

#include <bit>
#include <cstdint>

namespace ggl {

// Thue-Morse parity character.
//
// epsilon(n) = +1 when the binary expansion of n contains an even number
// of ones, -1 otherwise. The +1 class is balanced against the -1 class on
// every dyadic block [0, 2^k), and the character satisfies
//
//   epsilon(2n) = epsilon(n),  epsilon(2n+1) = -epsilon(n),
//   epsilon(x + 2^m y) = epsilon(x) * epsilon(y)   for 0 <= x < 2^m,
//
// which is what makes the Gelfond product factorization of its
// exponential sums work (see expsum.hpp, spectrum.hpp).
//
// epsilon(0) := +1 (empty digit sum is even); this is the extension
// forced by the splitting identity at x = 0.

// Number of ones in the binary expansion of n.
constexpr int digit_sum(std::uint64_t n) { return std::popcount(n); }

constexpr int epsilon(std::uint64_t n) {
  return (std::popcount(n) & 1) ? -1 : +1;
}

// Truncated character: parity of the k lowest binary digits only.
// Periodic with period 2^k; equals epsilon(n) for n < 2^k. Requires k >= 1.
constexpr int epsilon_k(std::uint64_t n, unsigned k) {
  const std::uint64_t mask =
      (k >= 64) ? ~0ULL : ((std::uint64_t{1} << k) - 1);
  return epsilon(n & mask);
}

}  // namespace ggl
