#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ggl/arith.hpp"
#include "ggl/constants.hpp"
#include "ggl/parity.hpp"

namespace ggl {

using cplx = std::complex<double>;

namespace detail {

// e^{2 pi i t}, with the argument reduced mod 1 before scaling by 2 pi.
inline cplx unit_phase(double t) {
  double f = t - std::floor(t);
  return std::polar(1.0, 2.0 * std::numbers::pi * f);
}

// Incremental-rotation evaluator for sums of w(n) e^{2 pi i alpha n},
// n = 1, 2, 3, ...  The rotor is re-anchored every 4096 steps, which keeps
// the phase error near the fmod level instead of the accumulated-drift
// level over long ranges.
class PhaseWalker {
 public:
  PhaseWalker(double alpha, std::uint64_t start_n)
      : alpha_(alpha),
        step_(unit_phase(alpha)),
        n_(start_n),
        phase_(unit_phase(alpha * static_cast<double>(start_n))) {}

  cplx current() const { return phase_; }
  void advance() {
    ++n_;
    if ((n_ & 0xFFF) == 0)
      phase_ = unit_phase(alpha_ * static_cast<double>(n_));
    else
      phase_ *= step_;
  }

 private:
  double alpha_;
  cplx step_;
  std::uint64_t n_;
  cplx phase_;
};

}  // namespace detail

// --------------------------------------------------------------------------
// Full character sum: sum_{n=1}^{X} epsilon(n) e^{2 pi i alpha n}.
// Direct summation; this is the reference (oracle) evaluation.
// --------------------------------------------------------------------------
inline cplx char_sum(double alpha, std::uint64_t X) {
  cplx acc = 0.0;
  detail::PhaseWalker w(alpha, 1);
  for (std::uint64_t n = 1; n <= X; ++n) {
    acc += static_cast<double>(epsilon(n)) * w.current();
    w.advance();
  }
  return acc;
}

// --------------------------------------------------------------------------
// Gelfond product: prod_{r=0}^{2Q-1} (1 - e^{2 pi i alpha 2^r}).
//
// Equals the full character sum over [0, 2^{2Q}): expanding the product
// over the choice of each binary digit reproduces epsilon(n) e^{2 pi i
// alpha n} term by term. Its magnitude obeys the Gelfond bound
// (2/sqrt(3)) * 2^{2Q lambda} with lambda = ln 3 / ln 4.
//
// The dyadic arguments alpha * 2^r are reduced mod 1 by exact doubling,
// so factors that should vanish (e.g. alpha dyadic rational) vanish
// exactly.
// --------------------------------------------------------------------------
inline cplx gelfond_product(double alpha, int Q) {
  if (Q < 1) throw std::invalid_argument("gelfond_product: Q must be >= 1");
  double x = alpha - std::floor(alpha);
  cplx prod = 1.0;
  for (int r = 0; r < 2 * Q; ++r) {
    prod *= (1.0 - std::polar(1.0, 2.0 * std::numbers::pi * x));
    x += x;
    if (x >= 1.0) x -= 1.0;
  }
  return prod;
}

// |gelfond_product| via prod 2|sin(pi alpha 2^r)|; cheaper and free of
// rotor error, used by the L1-norm quadrature.
inline double gelfond_magnitude(double alpha, int Q) {
  if (Q < 1) throw std::invalid_argument("gelfond_magnitude: Q must be >= 1");
  double x = alpha - std::floor(alpha);
  double prod = 1.0;
  for (int r = 0; r < 2 * Q; ++r) {
    prod *= 2.0 * std::abs(std::sin(std::numbers::pi * x));
    x += x;
    if (x >= 1.0) x -= 1.0;
  }
  return prod;
}

// --------------------------------------------------------------------------
// Prime exponential sums over p <= N:
//   unweighted: sum e^{2 pi i alpha p}
//   weighted:   sum epsilon(p) e^{2 pi i alpha p}
// --------------------------------------------------------------------------
inline cplx prime_sum(double alpha, std::uint64_t N, const PrimeTable& table,
                      bool weighted) {
  if (N > table.limit) throw std::out_of_range("prime_sum: N exceeds table limit");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    const std::uint64_t p = table.primes[i];
    if (p > N) break;
    cplx ph = detail::unit_phase(alpha * static_cast<double>(p));
    acc += weighted ? static_cast<double>(table.class_tag[i]) * ph : ph;
  }
  return acc;
}

// --------------------------------------------------------------------------
// Parity-twisted von Mangoldt sum: sum_{n<=X} epsilon(n) Lambda(n) e^{2 pi
// i alpha n}. Only prime powers contribute.
// --------------------------------------------------------------------------
inline cplx mangoldt_char_sum(double alpha, std::uint64_t X, const ArithTables& tables) {
  if (X > tables.limit)
    throw std::out_of_range("mangoldt_char_sum: X exceeds table limit");
  cplx acc = 0.0;
  for (std::uint64_t n = 2; n <= X; ++n) {
    const double lam = tables.mangoldt[n];
    if (lam == 0.0) continue;
    acc += static_cast<double>(epsilon(n)) * lam *
           detail::unit_phase(alpha * static_cast<double>(n));
  }
  return acc;
}

// Batch evaluation over an arbitrary alpha list. Direct summation over the
// nonzero support (prime powers), collected once.
inline std::vector<cplx> mangoldt_char_sum_batch(std::span<const double> alphas,
                                                 std::uint64_t X,
                                                 const ArithTables& tables) {
  if (X > tables.limit)
    throw std::out_of_range("mangoldt_char_sum_batch: X exceeds table limit");
  std::vector<std::pair<std::uint64_t, double>> support;
  for (std::uint64_t n = 2; n <= X; ++n)
    if (tables.mangoldt[n] != 0.0)
      support.emplace_back(n, static_cast<double>(epsilon(n)) * tables.mangoldt[n]);
  std::vector<cplx> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    cplx acc = 0.0;
    for (const auto& [n, w] : support)
      acc += w * detail::unit_phase(alpha * static_cast<double>(n));
    out.push_back(acc);
  }
  return out;
}

// Batch evaluation of the same sum on the uniform grid alpha = j/grid,
// j = 0..grid-1. Still direct summation: phases are table lookups at the
// exact root of unity, indexed by (j n) mod grid.
inline std::vector<cplx> mangoldt_char_sum_grid(std::uint64_t grid, std::uint64_t X,
                                                const ArithTables& tables) {
  if (X > tables.limit)
    throw std::out_of_range("mangoldt_char_sum_grid: X exceeds table limit");
  if (grid == 0) throw std::invalid_argument("mangoldt_char_sum_grid: empty grid");
  std::vector<cplx> roots(grid);
  for (std::uint64_t j = 0; j < grid; ++j)
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(grid));
  std::vector<cplx> out(grid, cplx{0.0, 0.0});
  for (std::uint64_t n = 2; n <= X; ++n) {
    const double lam = tables.mangoldt[n];
    if (lam == 0.0) continue;
    const double w = static_cast<double>(epsilon(n)) * lam;
    const std::uint64_t nmod = n % grid;
    std::uint64_t idx = 0;
    for (std::uint64_t j = 0; j < grid; ++j) {
      out[j] += w * roots[idx];
      idx += nmod;
      if (idx >= grid) idx -= grid;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Vaughan decomposition of the parity-twisted von Mangoldt sum with
// cutoff u = X^{0.1}:
//
//   W1 = sum_{d<=u} mu(d) sum_{n<=X/d} epsilon(dn) e^{2 pi i alpha dn} ln n
//   W2 = sum_{d<=u} mu(d) sum_{n<=u} Lambda(n) sum_{dnr<=X} epsilon(dnr)
//        e^{2 pi i alpha dnr}
//   W3 = sum_{u<m<=X/u} a_m sum_{u<n<=X/m} Lambda(n) epsilon(mn)
//        e^{2 pi i alpha mn},   a_m = sum_{d|m, d<=u} mu(d)
//
// and residual := S - (W1 - W2 - W3) with S the direct sum. u is kept as
// a real cutoff (no integer truncation); range conditions compare
// integers against it strictly/non-strictly exactly as written above.
// --------------------------------------------------------------------------
inline long long vaughan_coefficient(std::uint64_t m, double u, const ArithTables& tables) {
  if (m == 0) throw std::invalid_argument("vaughan_coefficient: m must be >= 1");
  long long a = 0;
  const std::uint64_t dmax = std::min<std::uint64_t>(m, static_cast<std::uint64_t>(u));
  if (dmax > tables.limit)
    throw std::out_of_range("vaughan_coefficient: cutoff exceeds table limit");
  for (std::uint64_t d = 1; d <= dmax; ++d)
    if (m % d == 0) a += tables.moebius[d];
  return a;
}

struct VaughanSplit {
  cplx w1, w2, w3;
  cplx residual;  // S - (w1 - w2 - w3)
  double u = 0.0;
};

inline VaughanSplit vaughan_split(double alpha, std::uint64_t X, const ArithTables& tables) {
  if (X < 100) throw std::invalid_argument("vaughan_split: X must be >= 100");
  if (X > tables.limit)
    throw std::out_of_range("vaughan_split: X exceeds table limit");
  VaughanSplit s;
  s.u = std::pow(static_cast<double>(X), 0.1);
  const auto u_floor = static_cast<std::uint64_t>(s.u);

  s.w1 = 0.0;
  for (std::uint64_t d = 1; d <= u_floor; ++d) {
    const int mu = tables.moebius[d];
    if (mu == 0) continue;
    cplx inner = 0.0;
    for (std::uint64_t n = 2; n <= X / d; ++n)  // ln 1 = 0
      inner += static_cast<double>(epsilon(d * n)) *
               std::log(static_cast<double>(n)) *
               detail::unit_phase(alpha * static_cast<double>(d * n));
    s.w1 += static_cast<double>(mu) * inner;
  }

  s.w2 = 0.0;
  for (std::uint64_t d = 1; d <= u_floor; ++d) {
    const int mu = tables.moebius[d];
    if (mu == 0) continue;
    for (std::uint64_t n = 2; n <= u_floor; ++n) {
      const double lam = tables.mangoldt[n];
      if (lam == 0.0) continue;
      cplx inner = 0.0;
      for (std::uint64_t r = 1; d * n * r <= X; ++r) {
        const std::uint64_t dnr = d * n * r;
        inner += static_cast<double>(epsilon(dnr)) *
                 detail::unit_phase(alpha * static_cast<double>(dnr));
      }
      s.w2 += static_cast<double>(mu) * lam * inner;
    }
  }

  s.w3 = 0.0;
  const auto m_max = static_cast<std::uint64_t>(static_cast<double>(X) / s.u);
  for (std::uint64_t m = u_floor + 1; m <= m_max; ++m) {
    const long long am = vaughan_coefficient(m, s.u, tables);
    if (am == 0) continue;
    cplx inner = 0.0;
    for (std::uint64_t n = u_floor + 1; n <= X / m; ++n) {
      const double lam = tables.mangoldt[n];
      if (lam == 0.0) continue;
      inner += lam * static_cast<double>(epsilon(m * n)) *
               detail::unit_phase(alpha * static_cast<double>(m * n));
    }
    s.w3 += static_cast<double>(am) * inner;
  }

  s.residual = mangoldt_char_sum(alpha, X, tables) - (s.w1 - s.w2 - s.w3);
  return s;
}

// --------------------------------------------------------------------------
// Bilinear (type II) sums over dyadic-style boxes (m_half, m1] x (n_half, n1].
// --------------------------------------------------------------------------

// |sum_{m} a_m sum_{n} Lambda(n) epsilon(mn) e^{2 pi i alpha mn}|
inline double bilinear_sum_w3(double alpha, std::uint64_t m_half, std::uint64_t m1,
                              std::uint64_t n_half, std::uint64_t n1, double u,
                              const ArithTables& tables) {
  if (m_half >= m1 || n_half >= n1)
    throw std::invalid_argument("bilinear_sum_w3: empty or inverted range");
  if (m1 > tables.limit / n1)
    throw std::out_of_range("bilinear_sum_w3: products exceed table limit");
  cplx acc = 0.0;
  for (std::uint64_t m = m_half + 1; m <= m1; ++m) {
    const long long am = vaughan_coefficient(m, u, tables);
    if (am == 0) continue;
    cplx inner = 0.0;
    for (std::uint64_t n = n_half + 1; n <= n1; ++n) {
      const double lam = tables.mangoldt[n];
      if (lam == 0.0) continue;
      inner += lam * static_cast<double>(epsilon(m * n)) *
               detail::unit_phase(alpha * static_cast<double>(m * n));
    }
    acc += static_cast<double>(am) * inner;
  }
  return std::abs(acc);
}

// sum_{n} |sum_{m} epsilon(mn) epsilon(mn + mh) e^{-2 pi i alpha m (n+h)}|
//
// Phase convention: the full shifted product m(n+h) carries the (negated)
// phase, matching how the sum is used after the van der Corput step.
inline double bilinear_sum_w4(double alpha, std::uint64_t h, std::uint64_t m_half,
                              std::uint64_t m1, std::uint64_t n_half, std::uint64_t n1) {
  if (m_half >= m1 || n_half >= n1)
    throw std::invalid_argument("bilinear_sum_w4: empty or inverted range");
  double total = 0.0;
  for (std::uint64_t n = n_half + 1; n <= n1; ++n) {
    cplx inner = 0.0;
    for (std::uint64_t m = m_half + 1; m <= m1; ++m) {
      const double sign = static_cast<double>(epsilon(m * n) * epsilon(m * n + m * h));
      inner += sign * detail::unit_phase(-alpha * static_cast<double>(m * (n + h)));
    }
    total += std::abs(inner);
  }
  return total;
}

// Same sum with the character truncated to its k lowest binary digits.
// Away from the top of each 2^k block the truncation is invisible:
// whenever mn mod 2^k < 2^k - mh, both factors agree with the full
// character.
inline double bilinear_sum_w4_trunc(double alpha, std::uint64_t h, std::uint64_t m_half,
                                    std::uint64_t m1, std::uint64_t n_half,
                                    std::uint64_t n1, unsigned k) {
  if (m_half >= m1 || n_half >= n1)
    throw std::invalid_argument("bilinear_sum_w4_trunc: empty or inverted range");
  double total = 0.0;
  for (std::uint64_t n = n_half + 1; n <= n1; ++n) {
    cplx inner = 0.0;
    for (std::uint64_t m = m_half + 1; m <= m1; ++m) {
      const double sign =
          static_cast<double>(epsilon_k(m * n, k) * epsilon_k(m * n + m * h, k));
      inner += sign * detail::unit_phase(-alpha * static_cast<double>(m * (n + h)));
    }
    total += std::abs(inner);
  }
  return total;
}

}  // namespace ggl
