#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ggl/parity.hpp"

namespace ggl {

// Primes up to `limit`, each tagged with its parity class epsilon(p).
// Completed tables are immutable; share freely across threads.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::int8_t> class_tag;  // class_tag[i] == epsilon(primes[i])

  // pi(n) for n <= limit.
  std::int64_t prime_count(std::uint64_t n) const {
    if (n > limit) throw std::out_of_range("prime_count: n exceeds table limit");
    return static_cast<std::int64_t>(
        std::upper_bound(primes.begin(), primes.end(), n) - primes.begin());
  }
};

namespace detail {

// Plain sieve of Eratosthenes on [0, limit], bit-packed via vector<bool>.
inline std::vector<bool> eratosthenes_flags(std::uint64_t limit) {
  std::vector<bool> is_prime(limit + 1, true);
  is_prime[0] = false;
  if (limit >= 1) is_prime[1] = false;
  for (std::uint64_t p = 2; p * p <= limit; ++p)
    if (is_prime[p])
      for (std::uint64_t q = p * p; q <= limit; q += p) is_prime[q] = false;
  return is_prime;
}

}  // namespace detail

// All primes <= limit with class tags. limit < 2 yields an empty table.
// Segmented above 2^20 so working memory stays O(segment).
inline PrimeTable sieve(std::uint64_t limit) {
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;

  auto push = [&table](std::uint64_t p) {
    table.primes.push_back(p);
    table.class_tag.push_back(static_cast<std::int8_t>(epsilon(p)));
  };

  if (limit <= kSegment) {
    auto flags = detail::eratosthenes_flags(limit);
    for (std::uint64_t n = 2; n <= limit; ++n)
      if (flags[n]) push(n);
    return table;
  }

  // Base primes up to sqrt(limit), then sieve segments of 2^20.
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  auto base_flags = detail::eratosthenes_flags(root);
  std::vector<std::uint64_t> base;
  for (std::uint64_t n = 2; n <= root; ++n)
    if (base_flags[n]) base.push_back(n);

  std::vector<bool> seg;
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    seg.assign(hi - lo + 1, true);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t q = start; q <= hi; q += p) seg[q - lo] = false;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (seg[n - lo] && n >= 2) push(n);
  }
  return table;
}

// von Mangoldt function: ln p if n = p^a, else 0. Trial division.
inline double mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));  // n itself prime
}

// Moebius function, in {-1, 0, +1}. Trial division.
inline int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++factors;
  }
  if (n > 1) ++factors;
  return (factors & 1) ? -1 : +1;
}

// Bulk tables of Lambda(n), mu(n), tau(n) for n <= limit, built from a
// smallest-prime-factor sieve. Lambda is stored in natural-log units;
// downstream comparisons against it use relative tolerances.
struct ArithTables {
  std::uint64_t limit = 0;
  std::vector<double> mangoldt;          // Lambda(n)
  std::vector<std::int8_t> moebius;      // mu(n)
  std::vector<std::uint32_t> divisor_count;  // tau(n)
};

inline ArithTables build_arith_tables(std::uint64_t limit) {
  ArithTables t;
  t.limit = limit;
  t.mangoldt.assign(limit + 1, 0.0);
  t.moebius.assign(limit + 1, 0);
  t.divisor_count.assign(limit + 1, 0);
  if (limit ==  0) return t;
  t.moebius[1] = 1;
  t.divisor_count[1] = 1;
  if (limit == 1) return t;

  std::vector<std::uint32_t> spf(limit + 1, 0);  // smallest prime factor
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0)
      for (std::uint64_t j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }

  for (std::uint64_t n = 2; n <= limit; ++n) {
    // Factor n via spf chain.
    std::uint64_t m = n;
    int distinct = 0;
    bool squarefree = true;
    std::uint32_t tau = 1;
    std::uint64_t first_p = spf[m];
    bool prime_power = true;
    while (m > 1) {
      std::uint64_t p = spf[m];
      if (p != first_p) prime_power = false;
      std::uint32_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e > 1) squarefree = false;
      tau *= (e + 1);
      ++distinct;
    }
    t.divisor_count[n] = tau;
    t.moebius[n] = squarefree ? ((distinct & 1) ? -1 : +1) : 0;
    if (prime_power) t.mangoldt[n] = std::log(static_cast<double>(first_p));
  }
  return t;
}

struct ClassCounts {
  std::int64_t total = 0;   // pi(n_limit)
  std::int64_t class0 = 0;  // primes p <= n_limit with epsilon(p) = +1
};

// The two prime classes have asymptotically equal density; this exposes
// the finite-scale counts.
inline ClassCounts class_prime_counts(const PrimeTable& table, std::uint64_t n_limit) {
  if (n_limit > table.limit)
    throw std::out_of_range("class_prime_counts: n_limit exceeds table limit");
  ClassCounts c;
  for (std::size_t i = 0; i < table.primes.size() && table.primes[i] <= n_limit; ++i) {
    ++c.total;
    if (table.class_tag[i] > 0) ++c.class0;
  }
  return c;
}

}  // namespace ggl
