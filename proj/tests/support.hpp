#pragma once

// Test-side oracles. Everything here is computed independently of the library
// (long double summation, closed forms, dense Gaussian elimination).

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "pathnoise/types.hpp"

namespace oracle {

using pathnoise::Complex;
using pathnoise::ComplexVector;
using LComplex = std::complex<long double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

inline long double sinc(long double x) { return x == 0.0L ? 1.0L : std::sin(x) / x; }

/// X(e^{i omega}) = sum_t x(t) e^{-i omega t}, accumulated in long double.
inline Complex transform(std::int64_t t_min, const ComplexVector& x, double omega) {
  LComplex acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double t = static_cast<long double>(t_min + static_cast<std::int64_t>(i));
    const LComplex v(x[i].real(), x[i].imag());
    acc += v * std::polar(1.0L, -static_cast<long double>(omega) * t);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// e^{i c t} (Omega/pi) sum_{k=-Kc..Kc} y_k sinc(k pi + Omega t) for t = t_first..t_last.
inline ComplexVector synthesize(double center, double half_width, const ComplexVector& y,
                                std::int64_t t_first, std::int64_t t_last) {
  const auto kc = static_cast<std::int64_t>((y.size() - 1) / 2);
  ComplexVector out;
  for (std::int64_t t = t_first; t <= t_last; ++t) {
    LComplex acc = 0;
    for (std::int64_t k = -kc; k <= kc; ++k) {
      const auto& c = y[static_cast<std::size_t>(k + kc)];
      acc += LComplex(c.real(), c.imag()) *
             sinc(static_cast<long double>(k) * kPiL + half_width * static_cast<long double>(t));
    }
    acc *= static_cast<long double>(half_width) / kPiL;
    acc *= std::polar(1.0L, static_cast<long double>(center) * static_cast<long double>(t));
    out.emplace_back(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

/// l2 norm over all of Z of the centered synthesis above: sqrt((Omega/pi) sum |y_k|^2).
inline double synthesis_norm(double half_width, const ComplexVector& y) {
  long double s = 0;
  for (const auto& c : y) s += std::norm(LComplex(c.real(), c.imag()));
  return static_cast<double>(std::sqrt(static_cast<long double>(half_width) / kPiL * s));
}

/// Solves the dense system M z = b by Gaussian elimination with partial pivoting.
inline std::vector<long double> solve(std::vector<std::vector<long double>> m,
                                      std::vector<long double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
    }
    std::swap(m[c], m[p]);
    std::swap(b[c], b[p]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<long double> z(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * z[j];
    z[i] = s / m[i][i];
  }
  return z;
}

inline double norm2(const ComplexVector& v) {
  long double s = 0;
  for (const auto& c : v) s += std::norm(LComplex(c.real(), c.imag()));
  return static_cast<double>(std::sqrt(s));
}

inline double distance(const ComplexVector& a, const ComplexVector& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Complex d = a[i] - b[i];
    s += std::norm(LComplex(d.real(), d.imag()));
  }
  return static_cast<double>(std::sqrt(s));
}

inline ComplexVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (auto& c : v) c = {g(rng), g(rng)};
  return v;
}

/// Coefficients on k = -K..K with only |k| <= active nonzero.
inline ComplexVector random_coefficients(std::mt19937_64& rng, int K, int active) {
  ComplexVector y(static_cast<std::size_t>(2 * K + 1));
  const auto inner = random_vector(rng, static_cast<std::size_t>(2 * active + 1));
  for (int k = -active; k <= active; ++k) {
    y[static_cast<std::size_t>(k + K)] = inner[static_cast<std::size_t>(k + active)];
  }
  return y;
}

}  // namespace oracle
