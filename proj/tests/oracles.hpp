#pragma once

// Independent reference implementations used only by the tests. Everything
// here deliberately avoids the library's code paths: different algorithms,
// different loop orders, different phase evaluation. Expected values in the
// test files were computed with these oracles first and then frozen.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "ggl/arith.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_trial(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (is_prime_trial(n)) out.push_back(n);
  return out;
}

// Odd-only Eratosthenes, structured differently from the library sieve.
inline std::uint64_t prime_count_oddsieve(std::uint64_t limit) {
  if (limit < 2) return 0;
  if (limit == 2) return 1;
  const std::uint64_t half = (limit - 1) / 2;  // odd numbers 3,5,...,2*half+1
  std::vector<bool> composite(half + 1, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  std::uint64_t count = 1;  // the prime 2
  for (std::uint64_t i = 1; i <= half; ++i)
    if (!composite[i] && 2 * i + 1 <= limit) ++count;
  return count;
}

// Digit sum by explicit base-2 expansion (no popcount).
inline int digit_sum_loop(std::uint64_t n) {
  int s = 0;
  while (n) {
    s += static_cast<int>(n & 1);
    n >>= 1;
  }
  return s;
}

inline int epsilon_loop(std::uint64_t n) { return (digit_sum_loop(n) % 2 == 0) ? 1 : -1; }

inline std::int64_t divisor_count_naive(std::uint64_t n) {
  std::int64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

inline cplx phase(double t) {
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

// Character sum with per-term std::polar (no incremental rotation).
inline cplx char_sum_naive(double alpha, std::uint64_t X) {
  cplx acc = 0.0;
  for (std::uint64_t n = 1; n <= X; ++n)
    acc += static_cast<double>(epsilon_loop(n)) * phase(alpha * static_cast<double>(n));
  return acc;
}

// ---------------------------------------------------------------------------
// Vaughan-split re-summation in the opposite loop order: one pass over the
// summed integer n' <= X, with the arithmetic coefficients rebuilt from
// divisor enumeration and trial-division mu/Lambda. Returns the residual
// S - (W1 - W2 - W3).
// ---------------------------------------------------------------------------
struct VaughanOracle {
  cplx w1, w2, w3, s, residual;
};

inline VaughanOracle vaughan_oracle(double alpha, std::uint64_t X) {
  const double u = std::pow(static_cast<double>(X), 0.1);
  VaughanOracle o;
  o.w1 = o.w2 = o.w3 = o.s = 0.0;
  for (std::uint64_t n = 1; n <= X; ++n) {
    const cplx term = static_cast<double>(epsilon_loop(n)) *
                      phase(alpha * static_cast<double>(n));
    o.s += ggl::mangoldt(n) * term;

    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const std::uint64_t m = n / d;  // n = d * m
      if (static_cast<double>(d) <= u) {
        c1 += ggl::moebius(d) * std::log(static_cast<double>(m));
        // c2: second factor of the triple d*k*r with Lambda on k <= u
        for (std::uint64_t k = 1; k <= m; ++k) {
          if (m % k != 0) continue;
          if (static_cast<double>(k) <= u) c2 += ggl::moebius(d) * ggl::mangoldt(k);
        }
      }
      // c3: n = m' * k with m' > u, k > u, coefficient a_{m'} Lambda(k)
      const std::uint64_t mprime = d;
      const std::uint64_t k = m;
      if (static_cast<double>(mprime) > u && static_cast<double>(k) > u &&
          static_cast<double>(mprime) * u <= static_cast<double>(X)) {
        double am = 0.0;
        for (std::uint64_t dd = 1; dd <= mprime; ++dd)
          if (mprime % dd == 0 && static_cast<double>(dd) <= u) am += ggl::moebius(dd);
        c3 += am * ggl::mangoldt(k);
      }
    }
    o.w1 += c1 * term;
    o.w2 += c2 * term;
    o.w3 += c3 * term;
  }
  o.residual = o.s - (o.w1 - o.w2 - o.w3);
  return o;
}

// ---------------------------------------------------------------------------
// Bilinear sums re-summed in the opposite loop order with naive phases.
// ---------------------------------------------------------------------------
inline double bilinear_w3_oracle(double alpha, std::uint64_t m_half, std::uint64_t m1,
                                 std::uint64_t n_half, std::uint64_t n1, double u) {
  cplx acc = 0.0;
  for (std::uint64_t n = n_half + 1; n <= n1; ++n) {
    const double lam = ggl::mangoldt(n);
    if (lam == 0.0) continue;
    for (std::uint64_t m = m_half + 1; m <= m1; ++m) {
      double am = 0.0;
      for (std::uint64_t d = 1; d <= m; ++d)
        if (m % d == 0 && static_cast<double>(d) <= u) am += ggl::moebius(d);
      acc += am * lam * static_cast<double>(epsilon_loop(m * n)) *
             phase(alpha * static_cast<double>(m * n));
    }
  }
  return std::abs(acc);
}

inline double bilinear_w4_oracle(double alpha, std::uint64_t h, std::uint64_t m_half,
                                 std::uint64_t m1, std::uint64_t n_half, std::uint64_t n1) {
  double total = 0.0;
  for (std::uint64_t n = n_half + 1; n <= n1; ++n) {
    cplx inner = 0.0;
    for (std::uint64_t m = m1; m > m_half; --m)  // reversed on purpose
      inner += static_cast<double>(epsilon_loop(m * n) * epsilon_loop(m * n + m * h)) *
               phase(-alpha * static_cast<double>(m) * static_cast<double>(n + h));
    total += std::abs(inner);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Goldbach triple-loop oracle: all ordered triples, epsilon applied to an
// arbitrary subset of coordinates selected by bit mask.
// ---------------------------------------------------------------------------
inline std::int64_t triple_count_oracle(std::uint64_t N,
                                        const std::vector<std::uint64_t>& primes,
                                        unsigned mask) {
  std::int64_t acc = 0;
  for (std::uint64_t p1 : primes) {
    if (p1 >= N) break;
    for (std::uint64_t p2 : primes) {
      if (p1 + p2 >= N) break;
      for (std::uint64_t p3 : primes) {
        if (p1 + p2 + p3 > N) break;
        if (p1 + p2 + p3 != N) continue;
        int sign = 1;
        if (mask & 1u) sign *= epsilon_loop(p1);
        if (mask & 2u) sign *= epsilon_loop(p2);
        if (mask & 4u) sign *= epsilon_loop(p3);
        acc += sign;
      }
    }
  }
  return acc;
}

}  // namespace oracle
