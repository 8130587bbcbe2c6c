#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerical code paths; each routine follows an independent route.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// Amplitude-amplification identity for real target amplitude: after r
// iterations the target is measured with probability sin^2((2r+1) theta).
inline double rotation_success_prob(double abs_p, int r) {
  const double s = std::sin((2.0 * r + 1.0) * std::asin(abs_p));
  return s * s;
}

inline int rotation_peak(double abs_p) {
  return static_cast<int>(std::lround(std::numbers::pi / (4.0 * std::asin(abs_p)) - 0.5));
}

// Direct evaluation with factorials and powers, no log domain. Valid while
// q! and alpha^q stay finite (q <= ~100 for small alpha).
inline double naive_factorial(long q) {
  double f = 1.0;
  for (long i = 2; i <= q; ++i) f *= static_cast<double>(i);
  return f;
}

inline double naive_coherent_norm(double alpha, long q1, long n) {
  double s = 0.0;
  for (long q = q1; q <= q1 + n; ++q) {
    s += std::exp(-alpha * alpha) * std::pow(alpha, 2.0 * q) / naive_factorial(q);
  }
  return 1.0 / std::sqrt(s);
}

inline double naive_coherent_abs_amplitude(double alpha, long q1, long n, long k) {
  return std::exp(-0.5 * alpha * alpha) * std::pow(alpha, static_cast<double>(k)) /
         std::sqrt(naive_factorial(k)) * naive_coherent_norm(alpha, q1, n);
}

// Explicit N x N matrix for G = U_D U_k, row-major.
inline std::vector<Complex> explicit_grover_matrix(const std::vector<Complex>& d,
                                                   std::size_t k_index) {
  const std::size_t n = d.size();
  std::vector<Complex> ud(n * n), uk(n * n, 0.0), g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ud[i * n + j] = 2.0 * d[i] * std::conj(d[j]) - (i == j ? 1.0 : 0.0);
    }
    uk[i * n + i] = (i == k_index) ? -1.0 : 1.0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) g[i * n + j] += ud[i * n + l] * uk[l * n + j];
  return g;
}

inline std::vector<Complex> matvec(const std::vector<Complex>& m, const std::vector<Complex>& v) {
  const std::size_t n = v.size();
  std::vector<Complex> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
  return out;
}

// Central differences.
template <typename F>
double d1(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <typename F>
double d2(F&& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Random normalized amplitudes with random phases. Magnitudes are drawn from
// [0.2, 1] before normalization so no single entry dominates.
inline std::vector<Complex> random_amplitudes(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> mag(0.2, 1.0);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::vector<Complex> amps(n);
  double total = 0.0;
  for (auto& a : amps) {
    a = std::polar(mag(rng), phase(rng));
    total += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(total);
  for (auto& a : amps) a *= scale;
  return amps;
}

}  // namespace oracles
