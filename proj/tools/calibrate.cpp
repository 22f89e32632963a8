// Measures the empirical constants that the test suite freezes: small-scale
// calibration of the "<<" bounds, the Vaughan residual envelope, prime class
// counts, and the Goldbach checkpoint counts. Output is a C++ fragment meant
// to be pasted into tests/fixtures.hpp after review.

#include <cinttypes>
#include <cstdio>
#include <vector>

#include "ggl/ggl.hpp"

using namespace ggl;

int main() {
  std::printf("// ---- calibration run ----\n");

  // Corollary-1 style constant: max_alpha |char_sum(alpha, X)| <= C X^lambda ln X,
  // X = 2^j. Grid: 1000 uniform alphas i/1000 plus 500 splitmix64(271828) alphas.
  {
    std::vector<double> alphas;
    for (int i = 0; i < 1000; ++i) alphas.push_back(i / 1000.0);
    SplitMix64 rng(271828);
    for (int i = 0; i < 500; ++i) alphas.push_back(rng.uniform01());
    double c_freeze = 0.0;
    std::printf("// char-sum sup bound, ratio per j:\n");
    for (int j = 1; j <= 16; ++j) {
      const std::uint64_t X = std::uint64_t{1} << j;
      double mx = 0.0;
      for (double a : alphas) mx = std::max(mx, std::abs(char_sum(a, X)));
      const double bound = std::pow(static_cast<double>(X), kGelfondLambda) *
                           std::log(static_cast<double>(X));
      const double ratio = mx / bound;
      if (j <= 8) c_freeze = std::max(c_freeze, ratio);
      std::printf("//   j=%2d max=%12.6f  ratio=%.6f%s\n", j, mx, ratio,
                  j == 8 ? "   <= freeze point" : "");
    }
    std::printf("inline constexpr double kCharSumSupC = %.6f;  // max ratio j<=8\n\n",
                c_freeze);
  }

  // Coefficient-mass constant: mass(k) <= C k 2^{theta0 k}.
  {
    double c_freeze = 0.0;
    std::printf("// coefficient mass, ratio per k:\n");
    for (unsigned k = 1; k <= 16; ++k) {
      const double mass = coefficient_mass(k);
      const double bound = k * std::pow(2.0, kThetaZero * k);
      const double ratio = mass / bound;
      if (k <= 8) c_freeze = std::max(c_freeze, ratio);
      std::printf("//   k=%2u mass=%12.6f ratio=%.6f\n", k, mass, ratio);
    }
    std::printf("inline constexpr double kCoeffMassC = %.6f;  // max ratio k<=8\n\n",
                c_freeze);
  }

  // Residue-class mass constant:
  // class_mass(k,t,a) <= C 2^{(0.5-c)(k-t)} |coeff_t(a)| k over nonzero classes.
  {
    double c_freeze = 0.0, worst_hi = 0.0;
    for (unsigned k = 1; k <= 12; ++k) {
      for (unsigned t = 0; t <= k; ++t) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << t); ++a) {
          const double anchor = std::abs(dft_product(t, a));
          const double lhs = residue_class_mass(k, t, a);
          if (anchor == 0.0) continue;
          const double rhs_unit =
              std::pow(2.0, (0.5 - kClassDecayC) * (k - t)) * anchor * k;
          const double ratio = lhs / rhs_unit;
          if (k <= 8) c_freeze = std::max(c_freeze, ratio);
          else worst_hi = std::max(worst_hi, ratio);
        }
      }
    }
    std::printf("// class mass: max ratio k<=8 = %.6f, worst k=9..12 = %.6f\n", c_freeze,
                worst_hi);
    std::printf("inline constexpr double kClassMassC = %.6f;\n\n", c_freeze);
  }

  // Vaughan residual envelope |residual| <= C u ln X, measured on X = 100,
  // 200, 500 at a few alphas.
  {
    const auto tables = build_arith_tables(1000);
    double c_freeze = 0.0;
    for (std::uint64_t X : {100ull, 200ull, 500ull, 1000ull}) {
      for (double alpha : {0.0, 0.5, 0.123456, 0.7071067811865476}) {
        const auto vs = vaughan_split(alpha, X, tables);
        const double env = vs.u * std::log(static_cast<double>(X));
        const double ratio = std::abs(vs.residual) / env;
        if (X <= 500) c_freeze = std::max(c_freeze, ratio);
        std::printf("// vaughan X=%4" PRIu64 " alpha=%.4f |residual|=%.3e ratio=%.3e\n",
                    X, alpha, std::abs(vs.residual), ratio);
      }
    }
    std::printf("inline constexpr double kVaughanResidualC = %.6e;\n\n", c_freeze);
  }

  // Prime class balance.
  {
    const auto t5 = sieve(100000);
    const auto cc5 = class_prime_counts(t5, 100000);
    double s0 = 0.0;
    for (auto tag : t5.class_tag) s0 += tag;
    std::printf("// pi(1e5)=%" PRId64 " class0=%" PRId64 " |S0(0)|/pi = %.6f\n", cc5.total,
                cc5.class0, std::abs(s0) / static_cast<double>(cc5.total));
    const auto t6 = sieve(1000000);
    const auto cc6 = class_prime_counts(t6, 1000000);
    std::printf("// pi(1e6)=%" PRId64 " class0=%" PRId64 " ratio=%.6f\n", cc6.total,
                cc6.class0,
                static_cast<double>(cc6.class0) / static_cast<double>(cc6.total));
    const auto cc2 = class_prime_counts(t6, 100);
    std::printf("inline constexpr long long kClass0At100 = %" PRId64 ";\n", cc2.class0);
    std::printf("inline constexpr long long kClass0At1e6 = %" PRId64 ";\n\n", cc6.class0);
  }

  // Goldbach checkpoints.
  {
    const auto table = sieve(100003);
    const std::vector<std::uint64_t> cps = {1001, 10001, 100001};
    const auto rows = ratio_report(cps, table);
    for (const auto& r : rows) {
      std::printf("// N=%" PRIu64 " J=%" PRId64 " J0=%" PRId64 " ratio=%.8f dev=%.8f\n",
                  r.n, r.j, r.j0, r.ratio, std::abs(r.ratio - 1.0));
    }
    std::printf("inline constexpr long long kJAtCheckpoints[3]  = {%" PRId64 ", %" PRId64
                ", %" PRId64 "};\n",
                rows[0].j, rows[1].j, rows[2].j);
    std::printf("inline constexpr long long kJ0AtCheckpoints[3] = {%" PRId64 ", %" PRId64
                ", %" PRId64 "};\n\n",
                rows[0].j0, rows[1].j0, rows[2].j0);
  }

  // Parity-twisted von Mangoldt decay across X = 2^j.
  {
    const auto tables = build_arith_tables(std::uint64_t{1} << 18);
    std::printf("// mangoldt-char decay, grid 2048:\n");
    double prev = 1e300;
    for (int j = 10; j <= 18; ++j) {
      const std::uint64_t X = std::uint64_t{1} << j;
      const auto vals = mangoldt_char_sum_grid(2048, X, tables);
      double mx = 0.0;
      for (const auto& v : vals) mx = std::max(mx, std::abs(v));
      const double ratio = mx / static_cast<double>(X);
      std::printf("//   j=%2d max|S|/X = %.8f %s\n", j, ratio,
                  ratio < prev ? "(down)" : "(UP)");
      prev = ratio;
    }
    std::printf("\n");
  }

  // Truncated-character comparison for the shifted bilinear sum.
  {
    std::printf("// w4 truncation on (8,16]x(8,16]:\n");
    for (std::uint64_t h : {1ull, 2ull, 3ull}) {
      for (unsigned k : {5u, 8u, 10u}) {
        const double full = bilinear_sum_w4(0.37, h, 8, 16, 8, 16);
        const double trunc = bilinear_sum_w4_trunc(0.37, h, 8, 16, 8, 16, k);
        // count pairs with mn mod 2^k >= 2^k - 2*M1*h
        const std::uint64_t size = std::uint64_t{1} << k;
        std::int64_t cnt = 0, agree_below = 0, below = 0;
        for (std::uint64_t m = 9; m <= 16; ++m)
          for (std::uint64_t n = 9; n <= 16; ++n) {
            const std::uint64_t r = (m * n) % size;
            const bool in_tail = r + 2 * 16 * h >= size;
            cnt += in_tail;
            if (!in_tail) {
              ++below;
              agree_below += (epsilon(m * n) * epsilon(m * n + m * h) ==
                              epsilon_k(m * n, k) * epsilon_k(m * n + m * h, k));
            }
          }
        std::printf("//   h=%" PRIu64 " k=%2u |full-trunc|=%.6f tail_count=%" PRId64
                    " below=%" PRId64 " agree_below=%" PRId64 "\n",
                    h, k, std::abs(full - trunc), cnt, below, agree_below);
      }
    }
  }

  return 0;
}
