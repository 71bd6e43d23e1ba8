#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace pathnoise {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into (-pi, pi].
double wrap_angle(double radians);

/// Finite-support sequence on integer time: samples for t_min .. t_min+size-1,
/// exact zeros elsewhere.
class TwoSidedSequence {
 public:
  TwoSidedSequence(std::int64_t t_min, ComplexVector values);

  static TwoSidedSequence impulse(std::int64_t t, Complex value = 1.0);

  std::int64_t t_min() const { return t_min_; }
  std::int64_t t_max() const { return t_min_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }

  /// Sample at t; zero outside the stored window.
  Complex at(std::int64_t t) const;

  /// Same samples, window widened or narrowed to [t_lo, t_hi].
  TwoSidedSequence window(std::int64_t t_lo, std::int64_t t_hi) const;

 private:
  std::int64_t t_min_;
  ComplexVector values_;
};

/// Observations x(t) for t = -T+1 .. 0; index T-1 holds x(0), the most recent.
class OneSidedSequence {
 public:
  explicit OneSidedSequence(ComplexVector values);

  static OneSidedSequence zeros(std::size_t horizon);

  std::size_t horizon() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }

  /// x(t) for t <= 0; zero for t <= -T.
  Complex at(std::int64_t t) const;

  /// Zero-pads into the older past up to the given horizon.
  OneSidedSequence padded(std::size_t horizon) const;

  /// Keeps only the `horizon` most recent samples.
  OneSidedSequence recent(std::size_t horizon) const;

  TwoSidedSequence as_two_sided() const;

  /// Samples t <= 0 of a two-sided sequence (the older part clipped at the window start).
  static OneSidedSequence from_two_sided(const TwoSidedSequence& x, std::size_t horizon);

 private:
  ComplexVector values_;
};

/// Arc of (-pi, pi] with center omega_I and half-width Omega. Membership is
/// half-open: center - Omega is inside, center + Omega is not.
class Band {
 public:
  Band(double center, double half_width);

  double center() const { return center_; }
  double half_width() const { return half_width_; }
  double measure() const { return 2.0 * half_width_; }

  bool contains(double omega) const;
  Band complement() const;

  /// True when every point of `other` lies in this arc (boundaries compared with tol).
  bool contains_arc(const Band& other, double tol = 1e-12) const;

  bool operator==(const Band&) const = default;

 private:
  double center_;
  double half_width_;
};

/// Uniform sampling of X(e^{i omega}) at omega_n = -pi + 2 pi (n+1)/N, n = 0..N-1.
class SpectrumGrid {
 public:
  explicit SpectrumGrid(ComplexVector values);

  static double frequency(std::size_t n, std::size_t size);
  static std::vector<double> frequencies(std::size_t size);

  std::size_t size() const { return values_.size(); }
  double frequency(std::size_t n) const { return frequency(n, values_.size()); }
  std::span<const Complex> values() const { return values_; }
  Complex operator[](std::size_t n) const { return values_[n]; }

 private:
  ComplexVector values_;
};

}  // namespace pathnoise
