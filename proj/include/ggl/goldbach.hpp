#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "ggl/arith.hpp"
#include "ggl/expsum.hpp"
#include "ggl/parity.hpp"

namespace ggl {

// --------------------------------------------------------------------------
// Ternary representation counts.
//
// Representations are ORDERED triples of primes (repetition allowed, p = 2
// included): that is what the circle-method identity J(N) = int S^3 e(-N
// alpha) counts, so everything here follows that convention.
//
// The four signed counts over ordered triples p1 + p2 + p3 = N are
//   t0 = sum 1,              t1 = sum epsilon(p1),
//   t2 = sum epsilon(p1) epsilon(p2),
//   t3 = sum epsilon(p1) epsilon(p2) epsilon(p3),
// with the character applied to the first j coordinates (any other
// j-subset gives the same value by symmetry of the triple count).
//
// Expanding prod_i (1 + epsilon(p_i))/2 over ordered triples gives the
// class-restricted count as an exact integer:
//   J0(N) = (t0 + 3 t1 + 3 t2 + t3) / 8.
// --------------------------------------------------------------------------
struct RepCounts {
  std::uint64_t n = 0;
  std::int64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;

  std::int64_t j() const { return t0; }
  std::int64_t j0_numerator() const { return t0 + 3 * t1 + 3 * t2 + t3; }
  std::int64_t j0() const { return j0_numerator() / 8; }
};

namespace detail {

inline std::vector<bool> prime_flags(const PrimeTable& table, std::uint64_t n) {
  if (n > table.limit) throw std::out_of_range("prime_flags: n exceeds table limit");
  std::vector<bool> flags(n + 1, false);
  for (std::uint64_t p : table.primes) {
    if (p > n) break;
    flags[p] = true;
  }
  return flags;
}

inline void check_odd_n(std::uint64_t N) {
  if (N < 3 || N % 2 == 0)
    throw std::invalid_argument("rep_counts: N must be an odd integer >= 3");
}

}  // namespace detail

// Direct count for a single N: loop over ordered (p1, p2), test p3.
// Integer-exact. Odd N below 7 yield all-zero counts.
inline RepCounts rep_counts(std::uint64_t N, const PrimeTable& table) {
  detail::check_odd_n(N);
  if (N > table.limit) throw std::out_of_range("rep_counts: N exceeds table limit");
  const auto flags = detail::prime_flags(table, N);
  RepCounts rc;
  rc.n = N;
  for (std::uint64_t p1 : table.primes) {
    if (p1 + 4 > N) break;
    const int e1 = epsilon(p1);
    for (std::uint64_t p2 : table.primes) {
      if (p1 + p2 + 2 > N) break;
      const std::uint64_t p3 = N - p1 - p2;
      if (!flags[p3]) continue;
      const int e2 = epsilon(p2);
      rc.t0 += 1;
      rc.t1 += e1;
      rc.t2 += e1 * e2;
      rc.t3 += e1 * e2 * epsilon(p3);
    }
  }
  return rc;
}

// --------------------------------------------------------------------------
// Batch path: pairwise-sum tables (convolutions of the prime indicator
// with itself and with its epsilon-weighted copy), then one pass over p3
// per target N. Integer-exact throughout; no floating transforms.
// --------------------------------------------------------------------------
struct PairTables {
  std::uint64_t limit = 0;                // pair sums tabulated for s <= limit
  std::vector<std::int32_t> count;        // #{(p,q): p+q = s}, ordered
  std::vector<std::int32_t> eps_first;    // sum epsilon(p)
  std::vector<std::int32_t> eps_both;     // sum epsilon(p) epsilon(q)
};

inline constexpr std::uint64_t kMaxPairTableLimit = std::uint64_t{1} << 22;

inline PairTables build_pair_tables(const PrimeTable& table, std::uint64_t limit) {
  if (limit > table.limit)
    throw std::out_of_range("build_pair_tables: limit exceeds sieve limit");
  if (limit > kMaxPairTableLimit)
    throw std::out_of_range("build_pair_tables: limit exceeds memory guard");
  PairTables pt;
  pt.limit = limit;
  pt.count.assign(limit + 1, 0);
  pt.eps_first.assign(limit + 1, 0);
  pt.eps_both.assign(limit + 1, 0);
  const auto& primes = table.primes;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p + 2 > limit) break;
    const int ep = table.class_tag[i];
    for (std::size_t j = 0; j < primes.size(); ++j) {
      const std::uint64_t s = p + primes[j];
      if (s > limit) break;
      pt.count[s] += 1;
      pt.eps_first[s] += ep;
      pt.eps_both[s] += ep * table.class_tag[j];
    }
  }
  return pt;
}

inline RepCounts rep_counts_from_pairs(std::uint64_t N, const PairTables& pairs,
                                       const PrimeTable& table) {
  detail::check_odd_n(N);
  if (N > pairs.limit + 2)
    throw std::out_of_range("rep_counts_from_pairs: N exceeds pair-table limit");
  RepCounts rc;
  rc.n = N;
  // Group ordered triples by the third coordinate.
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    const std::uint64_t p3 = table.primes[i];
    if (p3 + 4 > N) break;
    const std::uint64_t s = N - p3;
    rc.t0 += pairs.count[s];
    rc.t1 += pairs.eps_first[s];
    rc.t2 += pairs.eps_both[s];
    rc.t3 += table.class_tag[i] * pairs.eps_both[s];
  }
  return rc;
}

// All odd N in [7, n_max], exact, via the pair tables.
inline std::vector<RepCounts> rep_counts_fast(std::uint64_t n_max, const PrimeTable& table) {
  const PairTables pairs = build_pair_tables(table, n_max);
  std::vector<RepCounts> out;
  if (n_max < 7) return out;
  out.reserve((n_max - 7) / 2 + 1);
  for (std::uint64_t N = 7; N <= n_max; N += 2)
    out.push_back(rep_counts_from_pairs(N, pairs, table));
  return out;
}

// --------------------------------------------------------------------------
// Discretized circle-method identity.
//
// With S(alpha) = sum_{p<=N} e^{2 pi i alpha p} and S0 its
// epsilon-weighted twin, and L > 3N,
//
//   J(N)  = (1/L)  sum_{j<L} S(j/L)^3            e^{-2 pi i N j / L}
//   J0(N) = (1/8L) sum_{j<L} (S + S0)(j/L)^3     e^{-2 pi i N j / L}
//
// are exact by orthogonality: every triple sum lies in [6, 3N], and L
// exceeds that range, so the discrete average isolates p1+p2+p3 = N
// exactly. Both counts are recovered as integers after rounding; the
// pre-rounding residuals are reported for the precision check.
// --------------------------------------------------------------------------
struct CircleCheck {
  std::int64_t j_integral = 0;
  std::int64_t j0_integral = 0;
  std::int64_t j_direct = 0;
  std::int64_t j0_direct = 0;
  double j_residual = 0.0;   // |raw - rounded| before rounding
  double j0_residual = 0.0;
};

inline CircleCheck circle_identity_check(std::uint64_t N, std::uint64_t L,
                                         const PrimeTable& table) {
  detail::check_odd_n(N);
  if (N > table.limit)
    throw std::out_of_range("circle_identity_check: N exceeds table limit");
  if (L <= 3 * N)
    throw std::invalid_argument("circle_identity_check: require L > 3N for exactness");

  std::vector<cplx> roots(L);
  for (std::uint64_t j = 0; j < L; ++j)
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(L));

  // S and S0 on the full grid j/L; exact root indexing.
  std::vector<cplx> S(L, cplx{0.0, 0.0}), S0(L, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    const std::uint64_t p = table.primes[i];
    if (p > N) break;
    const double tag = table.class_tag[i];
    const std::uint64_t step = p % L;
    std::uint64_t idx = 0;
    for (std::uint64_t j = 0; j < L; ++j) {
      S[j] += roots[idx];
      S0[j] += tag * roots[idx];
      idx += step;
      if (idx >= L) idx -= L;
    }
  }

  cplx j_acc = 0.0, j0_acc = 0.0;
  const std::uint64_t nmod = N % L;
  std::uint64_t idx = 0;  // (N j) mod L
  for (std::uint64_t j = 0; j < L; ++j) {
    const cplx back = std::conj(roots[idx]);
    const cplx s = S[j];
    const cplx s_plus = S[j] + S0[j];
    j_acc += s * s * s * back;
    j0_acc += s_plus * s_plus * s_plus * back;
    idx += nmod;
    if (idx >= L) idx -= L;
  }
  const double j_raw = j_acc.real() / static_cast<double>(L);
  const double j0_raw = j0_acc.real() / (8.0 * static_cast<double>(L));

  CircleCheck out;
  out.j_integral = static_cast<std::int64_t>(std::llround(j_raw));
  out.j0_integral = static_cast<std::int64_t>(std::llround(j0_raw));
  out.j_residual = std::abs(j_raw - static_cast<double>(out.j_integral));
  out.j0_residual = std::abs(j0_raw - static_cast<double>(out.j0_integral));
  const RepCounts rc = rep_counts(N, table);
  out.j_direct = rc.j();
  out.j0_direct = rc.j0();
  return out;
}

// Smallest power of two strictly above 3N (the canonical modulus choice).
inline std::uint64_t circle_modulus(std::uint64_t N) { return std::bit_ceil(3 * N + 1); }

// --------------------------------------------------------------------------
// Convergence diagnostics: one row per checkpoint N with the exact counts,
// the ratio 8 J0/J, and J (ln N)^3 / N^2 as a finite-scale proxy for the
// lower-bound growth of J.
// --------------------------------------------------------------------------
struct RatioRow {
  std::uint64_t n = 0;
  std::int64_t j = 0;
  std::int64_t j0 = 0;
  double ratio = 0.0;              // 8 J0 / J
  double lower_bound_proxy = 0.0;  // J (ln N)^3 / N^2
};

inline std::vector<RatioRow> ratio_report(std::span<const std::uint64_t> checkpoints,
                                          const PrimeTable& table) {
  std::vector<RatioRow> rows;
  if (checkpoints.empty()) return rows;
  std::uint64_t n_max = 0;
  for (std::uint64_t n : checkpoints) n_max = std::max(n_max, n);
  const PairTables pairs = build_pair_tables(table, n_max);
  rows.reserve(checkpoints.size());
  for (std::uint64_t N : checkpoints) {
    const RepCounts rc = rep_counts_from_pairs(N, pairs, table);
    RatioRow row;
    row.n = N;
    row.j = rc.j();
    row.j0 = rc.j0();
    row.ratio = rc.j() > 0 ? 8.0 * static_cast<double>(rc.j0()) / static_cast<double>(rc.j())
                           : 0.0;
    const double ln_n = std::log(static_cast<double>(N));
    row.lower_bound_proxy = static_cast<double>(rc.j()) * ln_n * ln_n * ln_n /
                            (static_cast<double>(N) * static_cast<double>(N));
    rows.push_back(row);
  }
  return rows;
}

// Fixed golden-file column order.
inline void write_ratio_csv(std::span<const RatioRow> rows, std::ostream& os) {
  os << "N,J,J0,ratio,lower_bound_proxy\n";
  char line[160];
  for (const RatioRow& r : rows) {
    std::snprintf(line, sizeof(line), "%llu,%lld,%lld,%.12g,%.12g\n",
                  static_cast<unsigned long long>(r.n), static_cast<long long>(r.j),
                  static_cast<long long>(r.j0), r.ratio, r.lower_bound_proxy);
    os << line;
  }
}

}  // namespace ggl
