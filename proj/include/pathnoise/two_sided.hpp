#pragma once

// Randomness of two-sided sequences: the ess-inf measure sigma(x), the
// constant-modulus noise split of the spectrum, and optimal recovery of a
// single missing sample.

#include <cstdint>
#include <optional>

#include "pathnoise/spectral.hpp"
#include "pathnoise/types.hpp"

namespace pathnoise {

struct SigmaReport {
  double sigma = 0.0;             ///< min_n |X_n|
  double omega0 = 0.0;            ///< smallest grid frequency attaining sigma
  double normalized_ratio = 0.0;  ///< 2 pi sigma / L1(|X|), 0 when L1 = 0
  std::size_t grid_size = 0;
};

SigmaReport sigma_of(const SpectrumGrid& spectrum);
SigmaReport sigma_of(const TwoSidedSequence& x, std::size_t grid_size = kDefaultGridSize);

/// Closed arc {omega : |e^{i omega} - e^{i omega0}| <= eps}.
struct ChordArc {
  double center = 0.0;
  double epsilon = 0.0;

  bool contains(double omega) const;
  /// Angular half-width 2 asin(eps/2), or pi when the arc is the whole circle.
  double half_width() const;
};

struct GammaDecomposition {
  SpectrumGrid predictable;  ///< Y = (1 - gamma_eps) X
  SpectrumGrid noise;        ///< N = gamma_eps X
  double sigma = 0.0;
  double omega0 = 0.0;
  double epsilon = 0.0;
  std::optional<ChordArc> arc;  ///< I_eps; empty when eps = 0
  bool degenerate = false;      ///< sigma = 0 with eps = 0: Y = X, N = 0

  /// n_eps on t_min..t_max.
  TwoSidedSequence noise_sequence(std::int64_t t_min, std::int64_t t_max) const;
  TwoSidedSequence predictable_sequence(std::int64_t t_min, std::int64_t t_max) const;
};

GammaDecomposition gamma_decompose(const SpectrumGrid& spectrum, double epsilon);
GammaDecomposition gamma_decompose(const TwoSidedSequence& x, double epsilon,
                                   std::size_t grid_size = kDefaultGridSize);

/// Known class parameters: min |X| = |X(e^{i omega0})| = sigma.
struct RecoveryClass {
  double omega0 = kPi;
  double sigma = 0.0;
};

struct RecoveryReport {
  std::int64_t m = 0;
  Complex estimate;
  double omega0 = 0.0;
  double worst_case_error = 0.0;
  bool class_supplied = false;
};

/// Estimate of the hidden sample x(m): -e^{i omega0 m} Y(e^{i omega0}), where
/// Y is the transform of the observed samples (any stored value at m is ignored).
///
/// Without a class, omega0 is the grid minimizer of |Y| (ties within 1e-12
/// relative go to the largest frequency) and the reported worst case is
/// |Y(e^{i omega0})|.
RecoveryReport recover_missing(const TwoSidedSequence& observed, std::int64_t m,
                               std::size_t grid_size = kDefaultGridSize,
                               std::optional<RecoveryClass> cls = std::nullopt);

}  // namespace pathnoise
