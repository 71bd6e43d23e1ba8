#pragma once

// Causal linear one-step predictor
//   x_hat(t) = e^{i omega_I t} sum_{j=1..L} k(j) e^{-i omega_I (t-j)} x(t-j)
// with taps chosen by band-restricted least squares: they minimize
//   int_{-Omega}^{Omega} |1 - sum_j k(j) e^{-i omega j}|^2 d omega.

#include <cstdint>
#include <optional>
#include <vector>

#include "pathnoise/band_estimator.hpp"
#include "pathnoise/types.hpp"

namespace pathnoise {

inline constexpr std::size_t kDesignErrorGrid = 8192;

struct FirPredictor {
  Band band;
  ComplexVector taps;  ///< taps[j-1] = k(j), j = 1..L
  double design_error = 0.0;

  std::size_t length() const { return taps.size(); }
};

FirPredictor design_predictor(const Band& band, std::size_t length, double lambda = 0.0);

/// Design over the whole circle (Omega = pi), which no Band can represent.
/// One-step prediction is impossible there: the taps vanish and the error is 1.
FirPredictor design_full_band(std::size_t length);

/// Prediction of x(t) from samples s <= t-1 of x (samples outside x's window count as zero).
Complex predict_one_step(const FirPredictor& p, const TwoSidedSequence& x, std::int64_t t);

/// One-step predictions for every t in [t_first, t_last], each from true history.
TwoSidedSequence predict_one_step_series(const FirPredictor& p, const TwoSidedSequence& x,
                                         std::int64_t t_first, std::int64_t t_last);

struct PredictionRun {
  BandEstimate estimate;
  FirPredictor predictor;
  ComplexVector predictions;  ///< predictions[h-1] is x_hat(h), h = 1..horizon
  std::vector<std::size_t> pseudo_history;  ///< per step: taps fed by earlier predictions
};

struct PredictRequest {
  std::int64_t tau_split = -64;
  double nu = kPi;
  std::size_t taps = 32;
  std::size_t horizon = 8;
  std::optional<double> half_width;  ///< overrides the estimated half-width
  EstimatorConfig estimator;
};

/// Two-step protocol: estimate the band from {t <= tau_split}, then predict
/// t = 1..horizon recursively from {tau_split < s < t}. Throws
/// AmbiguousBandError when the estimate is ambiguous.
PredictionRun predict_with_estimated_band(const OneSidedSequence& x, const PredictRequest& req);

}  // namespace pathnoise
