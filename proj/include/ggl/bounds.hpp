#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ggl/constants.hpp"
#include "ggl/expsum.hpp"
#include "ggl/parity.hpp"

namespace ggl {

// --------------------------------------------------------------------------
// Midpoint quadrature on [0,1] with doubling refinement.
//
// The integrands here all vanish at dyadic rationals; midpoint nodes never
// land on those zeros, so no special-casing is needed. est_error is the
// difference between the last two refinement levels and the result is only
// accepted once est_error/value drops below rel_tol.
// --------------------------------------------------------------------------
struct QuadratureResult {
  double value = 0.0;
  std::uint64_t grid_points = 0;
  double est_error = 0.0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double last_value, double last_est,
                  std::uint64_t last_grid)
      : std::runtime_error(what + " (value=" + std::to_string(last_value) +
                           ", est_error=" + std::to_string(last_est) +
                           ", grid=" + std::to_string(last_grid) + ")"),
        value(last_value),
        est_error(last_est),
        grid_points(last_grid) {}
  double value;
  double est_error;
  std::uint64_t grid_points;
};

template <class F>
double midpoint_level(F&& f, std::uint64_t n) {
  const double h = 1.0 / static_cast<double>(n);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < n; ++i)
    acc += f((static_cast<double>(i) + 0.5) * h);
  return acc * h;
}

template <class F>
QuadratureResult integrate_midpoint(F&& f, std::uint64_t n0 = 1024,
                                    std::uint64_t n_max = std::uint64_t{1} << 23,
                                    double rel_tol = 1e-4) {
  double prev = midpoint_level(f, n0);
  double cur = prev;
  double est = 0.0;
  for (std::uint64_t n = 2 * n0; n <= n_max; n *= 2) {
    cur = midpoint_level(f, n);
    est = std::abs(cur - prev);
    if (est <= rel_tol * std::max(std::abs(cur), 1e-300))
      return {cur, n, est};
    prev = cur;
  }
  throw QuadratureError("midpoint quadrature did not converge", cur, est, n_max);
}

// --------------------------------------------------------------------------
// Distance to the nearest integer, and the saturated reciprocal-norm sum
//   sum_{x=1}^{P} min(U, ||alpha x + beta||^{-1}).
// Terms where the norm vanishes saturate at U. With alpha = a/q + theta/q^2,
// (a,q) = 1, |theta| <= 1, the sum is bounded by 6 (P/q + 1)(U + q ln q);
// the log is the natural log (for q = 1 the term vanishes either way).
// --------------------------------------------------------------------------
inline double nearest_int_dist(double x) { return std::abs(x - std::round(x)); }

inline double min_norm_sum(double alpha, double beta, double U, std::uint64_t P) {
  if (U <= 0.0) throw std::invalid_argument("min_norm_sum: U must be positive");
  if (P < 1) throw std::invalid_argument("min_norm_sum: P must be >= 1");
  double acc = 0.0;
  for (std::uint64_t x = 1; x <= P; ++x) {
    const double d = nearest_int_dist(alpha * static_cast<double>(x) + beta);
    acc += (d > 0.0) ? std::min(U, 1.0 / d) : U;
  }
  return acc;
}

// --------------------------------------------------------------------------
// Continued-fraction convergent a/q of alpha with q <= q_max, so that
// alpha = a/q + theta/q^2 with |theta| <= 1 (Dirichlet guarantee).
// --------------------------------------------------------------------------
struct RationalApprox {
  long long a = 0;
  long long q = 1;
  double theta = 0.0;
};

inline RationalApprox rational_approx(double alpha, long long q_max) {
  if (q_max < 1) throw std::invalid_argument("rational_approx: q_max must be >= 1");
  long long p_prev = 1, q_prev = 0;
  auto a0 = static_cast<long long>(std::floor(alpha));
  long long p_cur = a0, q_cur = 1;
  double x = alpha - std::floor(alpha);
  for (int iter = 0; iter < 64 && x > 1e-15; ++iter) {
    x = 1.0 / x;
    if (x > 9.0e15) break;  // partial quotient beyond double's integer range
    const auto digit = static_cast<long long>(std::floor(x));
    const long long q_next = digit * q_cur + q_prev;
    if (q_next > q_max) break;
    const long long p_next = digit * p_cur + p_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    x -= std::floor(x);
  }
  RationalApprox r;
  r.a = p_cur;
  r.q = q_cur;
  r.theta = (alpha - static_cast<double>(p_cur) / static_cast<double>(q_cur)) *
            static_cast<double>(q_cur) * static_cast<double>(q_cur);
  return r;
}

// --------------------------------------------------------------------------
// L1 norms over [0,1].
//
// gelfond_l1_norm(Q): int |prod_{r<2Q} (1 - e^{2 pi i alpha 2^r})| dalpha,
// which must stay below 2^{Q theta0}. The Q = 1 case has the closed form
// 16/(3 pi).
//
// char_sum_l1_norm(X): the same integral for the plain truncated character
// sum, evaluated with the direct-summation integrand.
// --------------------------------------------------------------------------
inline QuadratureResult gelfond_l1_norm(int Q, double rel_tol = 1e-4) {
  if (Q < 1 || Q > 14) throw std::out_of_range("gelfond_l1_norm: Q must be in [1,14]");
  // The finest factor oscillates 2^{2Q-1} times; start past that scale.
  const std::uint64_t n0 = std::max<std::uint64_t>(1024, std::uint64_t{1} << (2 * Q));
  return integrate_midpoint([Q](double a) { return gelfond_magnitude(a, Q); }, n0,
                            std::uint64_t{1} << 26, rel_tol);
}

inline QuadratureResult char_sum_l1_norm(std::uint64_t X, double rel_tol = 1e-4) {
  if (X < 1 || X > (std::uint64_t{1} << 14))
    throw std::out_of_range("char_sum_l1_norm: X must be in [1, 2^14]");
  const std::uint64_t n0 = std::max<std::uint64_t>(1024, 2 * std::bit_ceil(X));
  return integrate_midpoint([X](double a) { return std::abs(char_sum(a, X)); }, n0,
                            std::uint64_t{1} << 24, rel_tol);
}

// --------------------------------------------------------------------------
// Gallagher node-sum check for S(t) = sum_{x<2^k} epsilon(x) e^{2 pi i t x}
// at the dyadic nodes t_r = r/2^k:
//
//   sum_r |S(t_r)|  <=  2^k int_0^1 |S| dt + (1/2) int_0^1 |S'| dt.
//
// Both integrals are evaluated by quadrature; the node spacing delta is
// 2^{-k}, so the first term carries the 1/delta factor.
// --------------------------------------------------------------------------
struct GallagherCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

inline GallagherCheck gallagher_check(unsigned k, double rel_tol = 1e-4) {
  if (k < 1 || k > 12) throw std::out_of_range("gallagher_check: k must be in [1,12]");
  const std::uint64_t size = std::uint64_t{1} << k;

  GallagherCheck out;
  // Node sum, exact roots of unity indexed by (r x) mod 2^k.
  std::vector<cplx> roots(size);
  for (std::uint64_t j = 0; j < size; ++j)
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(size));
  for (std::uint64_t r = 0; r < size; ++r) {
    cplx acc = 0.0;
    for (std::uint64_t x = 0; x < size; ++x)
      acc += static_cast<double>(epsilon(x)) * roots[(r * x) & (size - 1)];
    out.lhs += std::abs(acc);
  }

  auto S_abs = [size](double t) {
    cplx acc = 0.0;
    detail::PhaseWalker w(t, 0);
    for (std::uint64_t x = 0; x < size; ++x) {
      acc += static_cast<double>(epsilon(x)) * w.current();
      w.advance();
    }
    return std::abs(acc);
  };
  auto Sprime_abs = [size](double t) {
    cplx acc = 0.0;
    detail::PhaseWalker w(t, 0);
    for (std::uint64_t x = 0; x < size; ++x) {
      acc += static_cast<double>(x) * static_cast<double>(epsilon(x)) * w.current();
      w.advance();
    }
    return 2.0 * std::numbers::pi * std::abs(acc);
  };

  const std::uint64_t n0 = std::max<std::uint64_t>(1024, 4 * size);
  const auto l1 = integrate_midpoint(S_abs, n0, std::uint64_t{1} << 24, rel_tol);
  const auto l1d = integrate_midpoint(Sprime_abs, n0, std::uint64_t{1} << 24, rel_tol);
  out.rhs = static_cast<double>(size) * l1.value + 0.5 * l1d.value;
  return out;
}

}  // namespace ggl
