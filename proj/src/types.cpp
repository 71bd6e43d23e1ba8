#include "pathnoise/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pathnoise/errors.hpp"

namespace pathnoise {

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError(std::string(what) + ": non-finite sample");
    }
  }
}

}  // namespace

double wrap_angle(double radians) {
  double r = std::remainder(radians, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

TwoSidedSequence::TwoSidedSequence(std::int64_t t_min, ComplexVector values)
    : t_min_(t_min), values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("sequence: at least one sample required");
  require_finite(values_, "sequence");
}

TwoSidedSequence TwoSidedSequence::impulse(std::int64_t t, Complex value) {
  return TwoSidedSequence(t, ComplexVector{value});
}

Complex TwoSidedSequence::at(std::int64_t t) const {
  if (t < t_min_ || t > t_max()) return {};
  return values_[static_cast<std::size_t>(t - t_min_)];
}

TwoSidedSequence TwoSidedSequence::window(std::int64_t t_lo, std::int64_t t_hi) const {
  if (t_hi < t_lo) throw ValidationError("window: t_hi < t_lo");
  ComplexVector out(static_cast<std::size_t>(t_hi - t_lo + 1));
  for (std::int64_t t = t_lo; t <= t_hi; ++t) out[static_cast<std::size_t>(t - t_lo)] = at(t);
  return TwoSidedSequence(t_lo, std::move(out));
}

OneSidedSequence::OneSidedSequence(ComplexVector values) : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("one-sided sequence: horizon must be >= 1");
  require_finite(values_, "one-sided sequence");
}

OneSidedSequence OneSidedSequence::zeros(std::size_t horizon) {
  return OneSidedSequence(ComplexVector(horizon));
}

Complex OneSidedSequence::at(std::int64_t t) const {
  const auto T = static_cast<std::int64_t>(values_.size());
  if (t > 0 || t <= -T) return {};
  return values_[static_cast<std::size_t>(t + T - 1)];
}

OneSidedSequence OneSidedSequence::padded(std::size_t horizon) const {
  if (horizon < values_.size()) throw ValidationError("padded: horizon shorter than sequence");
  ComplexVector out(horizon);
  std::copy(values_.begin(), values_.end(), out.end() - static_cast<std::ptrdiff_t>(values_.size()));
  return OneSidedSequence(std::move(out));
}

OneSidedSequence OneSidedSequence::recent(std::size_t horizon) const {
  if (horizon == 0) throw ValidationError("recent: horizon must be >= 1");
  if (horizon >= values_.size()) return padded(horizon);
  return OneSidedSequence(
      ComplexVector(values_.end() - static_cast<std::ptrdiff_t>(horizon), values_.end()));
}

TwoSidedSequence OneSidedSequence::as_two_sided() const {
  return TwoSidedSequence(-static_cast<std::int64_t>(values_.size()) + 1, values_);
}

OneSidedSequence OneSidedSequence::from_two_sided(const TwoSidedSequence& x,
                                                  std::size_t horizon) {
  if (horizon == 0) throw ValidationError("from_two_sided: horizon must be >= 1");
  const auto T = static_cast<std::int64_t>(horizon);
  ComplexVector out(horizon);
  for (std::int64_t t = -T + 1; t <= 0; ++t) out[static_cast<std::size_t>(t + T - 1)] = x.at(t);
  return OneSidedSequence(std::move(out));
}

Band::Band(double center, double half_width) {
  if (!std::isfinite(center) || !std::isfinite(half_width)) {
    throw ValidationError("band: non-finite parameters");
  }
  if (!(half_width > 0.0 && half_width < kPi)) {
    throw ValidationError("band: half-width must lie in (0, pi)");
  }
  center_ = wrap_angle(center);
  half_width_ = half_width;
}

bool Band::contains(double omega) const {
  // Offset from the center in [-pi, pi).
  double d = std::remainder(omega - center_, kTwoPi);
  if (d >= kPi) d -= kTwoPi;
  return d >= -half_width_ && d < half_width_;
}

Band Band::complement() const { return Band(center_ + kPi, kPi - half_width_); }

bool Band::contains_arc(const Band& other, double tol) const {
  const double offset = std::abs(wrap_angle(other.center_ - center_));
  return offset + other.half_width_ <= half_width_ + tol;
}

SpectrumGrid::SpectrumGrid(ComplexVector values) : values_(std::move(values)) {
  if (values_.size() < 2) throw ValidationError("spectrum grid: N must be >= 2");
}

double SpectrumGrid::frequency(std::size_t n, std::size_t size) {
  if (n + 1 == size) return kPi;
  return -kPi + kTwoPi * static_cast<double>(n + 1) / static_cast<double>(size);
}

std::vector<double> SpectrumGrid::frequencies(std::size_t size) {
  std::vector<double> out(size);
  for (std::size_t n = 0; n < size; ++n) out[n] = frequency(n, size);
  return out;
}

}  // namespace pathnoise
