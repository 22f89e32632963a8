#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ggl/expsum.hpp"
#include "ggl/parity.hpp"

namespace ggl {

// Normalized discrete Fourier coefficients of the truncated parity
// character on [0, 2^k):
//
//   coeff(r) = 2^{-k} sum_{l=0}^{2^k-1} epsilon(l) e^{-2 pi i r l / 2^k}
//
// Since |epsilon| = 1, Parseval gives sum_r |coeff(r)|^2 = 1, and the
// balance of the character makes coeff(0) = 0 for k >= 1.
struct Spectrum {
  unsigned k = 0;
  std::vector<cplx> coeffs;  // size 2^k
};

inline constexpr unsigned kMaxSpectrumK = 20;  // 2^k table guard

namespace detail {

inline void check_spectrum_k(unsigned k) {
  if (k < 1 || k > kMaxSpectrumK)
    throw std::out_of_range("spectrum: k must be in [1, 20]");
}

}  // namespace detail

// Single coefficient in product form:
//   2^{-k} prod_{j=0}^{k-1} (1 - e^{-2 pi i r 2^j / 2^k}).
//
// This is the same digit-by-digit factorization as the Gelfond product.
// Phases are reduced with integer arithmetic ((r << j) mod 2^k), so
// coefficients that vanish (all even r) vanish exactly. k = 0 is allowed
// and yields 1 (empty product), which is the correct base of the
// hierarchy below.
inline cplx dft_product(unsigned k, std::uint64_t r) {
  if (k > kMaxSpectrumK + 12)
    throw std::out_of_range("dft_product: k too large");
  const std::uint64_t size = std::uint64_t{1} << k;
  if (r >= size) throw std::out_of_range("dft_product: r out of [0, 2^k)");
  cplx prod = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    const std::uint64_t num = (r << j) & (size - 1);
    if (num == 0) return cplx{0.0, 0.0};
    const double frac = static_cast<double>(num) / static_cast<double>(size);
    prod *= (1.0 - std::polar(1.0, -2.0 * std::numbers::pi * frac));
  }
  return prod / static_cast<double>(size);
}

// The leading length-(k-t) part of the product form,
//   2^{-(k-t)} prod_{j=0}^{k-t-1} (1 - e^{-2 pi i r 2^j / 2^k}),
// so that coeff_k(r) = hierarchy_tail(k, t, r) * coeff_t(r mod 2^t):
// the trailing t factors of the product only see r mod 2^t.
inline cplx hierarchy_tail(unsigned k, unsigned t, std::uint64_t r) {
  if (t > k) throw std::invalid_argument("hierarchy_tail: t must be <= k");
  const std::uint64_t size = std::uint64_t{1} << k;
  if (r >= size) throw std::out_of_range("hierarchy_tail: r out of [0, 2^k)");
  cplx prod = 1.0;
  for (unsigned j = 0; j < k - t; ++j) {
    const std::uint64_t num = (r << j) & (size - 1);
    if (num == 0) return cplx{0.0, 0.0};
    const double frac = static_cast<double>(num) / static_cast<double>(size);
    prod *= (1.0 - std::polar(1.0, -2.0 * std::numbers::pi * frac));
  }
  return prod / static_cast<double>(std::uint64_t{1} << (k - t));
}

// Reference evaluation by the defining double sum, O(4^k).
inline Spectrum dft_direct(unsigned k) {
  detail::check_spectrum_k(k);
  const std::uint64_t size = std::uint64_t{1} << k;
  std::vector<cplx> roots(size);  // e^{-2 pi i j / 2^k}
  for (std::uint64_t j = 0; j < size; ++j)
    roots[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(size));
  Spectrum s;
  s.k = k;
  s.coeffs.resize(size);
  for (std::uint64_t r = 0; r < size; ++r) {
    cplx acc = 0.0;
    for (std::uint64_t l = 0; l < size; ++l)
      acc += static_cast<double>(epsilon(l)) * roots[(r * l) & (size - 1)];
    s.coeffs[r] = acc / static_cast<double>(size);
  }
  return s;
}

// Full table via the product form, O(k 2^k).
inline Spectrum spectrum_product(unsigned k) {
  detail::check_spectrum_k(k);
  const std::uint64_t size = std::uint64_t{1} << k;
  Spectrum s;
  s.k = k;
  s.coeffs.resize(size);
  for (std::uint64_t r = 0; r < size; ++r) s.coeffs[r] = dft_product(k, r);
  return s;
}

inline double parseval_mass(const Spectrum& s) {
  double mass = 0.0;
  for (const cplx& c : s.coeffs) mass += std::norm(c);
  return mass;
}

// Total absolute coefficient mass sum_r |coeff_k(r)|.
inline double coefficient_mass(unsigned k) {
  detail::check_spectrum_k(k);
  const std::uint64_t size = std::uint64_t{1} << k;
  double mass = 0.0;
  for (std::uint64_t r = 0; r < size; ++r) mass += std::abs(dft_product(k, r));
  return mass;
}

// Mass restricted to the residue class r == a (mod 2^t) inside [0, 2^k).
// t = 0 places no restriction and reproduces coefficient_mass(k).
inline double residue_class_mass(unsigned k, unsigned t, std::uint64_t a) {
  detail::check_spectrum_k(k);
  if (t > k) throw std::invalid_argument("residue_class_mass: t must be <= k");
  const std::uint64_t modulus = std::uint64_t{1} << t;
  if (a >= modulus) throw std::invalid_argument("residue_class_mass: a out of [0, 2^t)");
  const std::uint64_t size = std::uint64_t{1} << k;
  double mass = 0.0;
  for (std::uint64_t r = a; r < size; r += modulus) mass += std::abs(dft_product(k, r));
  return mass;
}

// CSV rows (r, re, im, abs), one per coefficient, with a header line.
inline void write_spectrum_csv(const Spectrum& s, std::ostream& os) {
  os << "r,re,im,abs\n";
  char line[128];
  for (std::uint64_t r = 0; r < s.coeffs.size(); ++r) {
    const cplx& c = s.coeffs[r];
    std::snprintf(line, sizeof(line), "%llu,%.12g,%.12g,%.12g\n",
                  static_cast<unsigned long long>(r), c.real(), c.imag(),
                  std::abs(c));
    os << line;
  }
}

}  // namespace ggl
