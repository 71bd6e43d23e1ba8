#pragma once

#include <cstddef>
#include <cstdint>

#include "pathnoise/types.hpp"

namespace pathnoise {

inline constexpr std::size_t kDefaultGridSize = 4096;

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// Direct summation of the Z-transform on the N-point grid.
SpectrumGrid ztransform(const TwoSidedSequence& x, std::size_t grid_size = kDefaultGridSize);

/// Trapezoid quadrature of the inverse transform over t_min..t_max.
TwoSidedSequence inverse_ztransform(const SpectrumGrid& spectrum, std::int64_t t_min,
                                    std::int64_t t_max);

/// Evaluates X(e^{i omega}) at an arbitrary frequency.
Complex evaluate_transform(const TwoSidedSequence& x, double omega);

/// Sample-wise multiplication by e^{i omega t} (the operator p_omega).
TwoSidedSequence modulate(const TwoSidedSequence& x, double omega);
OneSidedSequence modulate(const OneSidedSequence& x, double omega);

struct SequenceNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

struct GridNorms {
  double l1 = 0.0;  ///< (2 pi / N) sum |X_n|
  double linf = 0.0;
};

SequenceNorms norms(std::span<const Complex> samples);
SequenceNorms norms(const TwoSidedSequence& x);
SequenceNorms norms(const OneSidedSequence& x);
GridNorms norms(const SpectrumGrid& spectrum);

double l2_norm(std::span<const Complex> samples);

}  // namespace pathnoise
