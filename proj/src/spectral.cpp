#include "pathnoise/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "pathnoise/errors.hpp"
#include "pathnoise/kernels.hpp"

namespace pathnoise {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

SpectrumGrid ztransform(const TwoSidedSequence& x, std::size_t grid_size) {
  if (grid_size < 2) throw ValidationError("ztransform: grid size must be >= 2");
  ComplexVector out(grid_size);
  kernels::ztransform(x.t_min(), x.values(), out);
  return SpectrumGrid(std::move(out));
}

TwoSidedSequence inverse_ztransform(const SpectrumGrid& spectrum, std::int64_t t_min,
                                    std::int64_t t_max) {
  if (t_max < t_min) throw ValidationError("inverse_ztransform: t_max < t_min");
  ComplexVector out(static_cast<std::size_t>(t_max - t_min + 1));
  kernels::inverse_ztransform(spectrum.values(), t_min, out);
  return TwoSidedSequence(t_min, std::move(out));
}

Complex evaluate_transform(const TwoSidedSequence& x, double omega) {
  Complex out{};
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double t = static_cast<double>(x.t_min() + static_cast<std::int64_t>(j));
    out += x.values()[j] * std::polar(1.0, -omega * t);
  }
  return out;
}

TwoSidedSequence modulate(const TwoSidedSequence& x, double omega) {
  ComplexVector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double t = static_cast<double>(x.t_min() + static_cast<std::int64_t>(j));
    out[j] = std::polar(1.0, omega * t) * x.values()[j];
  }
  return TwoSidedSequence(x.t_min(), std::move(out));
}

OneSidedSequence modulate(const OneSidedSequence& x, double omega) {
  const auto T = static_cast<std::int64_t>(x.horizon());
  ComplexVector out(x.horizon());
  for (std::size_t j = 0; j < x.horizon(); ++j) {
    const double t = static_cast<double>(static_cast<std::int64_t>(j) - T + 1);
    out[j] = std::polar(1.0, omega * t) * x.values()[j];
  }
  return OneSidedSequence(std::move(out));
}

SequenceNorms norms(std::span<const Complex> samples) {
  SequenceNorms n;
  double sq = 0.0;
  for (const auto& v : samples) {
    const double a = std::abs(v);
    n.l1 += a;
    sq += std::norm(v);
    n.linf = std::max(n.linf, a);
  }
  n.l2 = std::sqrt(sq);
  return n;
}

SequenceNorms norms(const TwoSidedSequence& x) { return norms(x.values()); }
SequenceNorms norms(const OneSidedSequence& x) { return norms(x.values()); }

GridNorms norms(const SpectrumGrid& spectrum) {
  GridNorms n;
  double sum = 0.0;
  for (const auto& v : spectrum.values()) {
    const double a = std::abs(v);
    sum += a;
    n.linf = std::max(n.linf, a);
  }
  n.l1 = kTwoPi * sum / static_cast<double>(spectrum.size());
  return n;
}

double l2_norm(std::span<const Complex> samples) { return norms(samples).l2; }

}  // namespace pathnoise
