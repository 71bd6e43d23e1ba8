#pragma once

// Alternating projections of successive residuals onto I_k and its
// complement:
//   x_hat_k = P_{I_k} x_k,  y_k = x_k - x_hat_k,
//   y_hat_k = P_{I_k^c} y_k, x_{k+1} = y_k - y_hat_k,
// with the decrease ledger delta_k = ||x_k|| - ||y_k||,
// delta_bar_k = ||y_k|| - ||x_{k+1}||.

#include <optional>
#include <vector>

#include "pathnoise/lbl_operator.hpp"
#include "pathnoise/types.hpp"

namespace pathnoise {

enum class StopReason { predictable_y, predictable_x, nonreducible_x, nonreducible_y, max_steps };

const char* to_string(StopReason reason);

struct MultistepConfig {
  std::vector<Band> bands;  ///< schedule, cycled
  std::size_t max_steps = 16;
  double stop_tol = 1e-6;      ///< ||y_k|| or ||x_{k+1}|| below stop_tol ||x|| counts as zero
  double decrease_tol = 1e-4;  ///< delta below decrease_tol ||x|| counts as zero
  int K = kDefaultCoeffRange;
  std::size_t T = kDefaultHorizon;
  double lambda = 0.0;

  void validate() const;
};

struct StepRecord {
  std::size_t k = 0;
  Band band;
  double norm_x = 0.0;       ///< ||x_k||
  double norm_y = 0.0;       ///< ||y_k||
  double norm_x_next = 0.0;  ///< ||x_{k+1}||; equals norm_y when the step stopped before y_hat_k
  double delta = 0.0;
  double delta_bar = 0.0;
};

struct Component {
  OneSidedSequence x_hat;
  std::optional<OneSidedSequence> y_hat;
};

struct MultistepResult {
  std::vector<Component> components;
  std::vector<StepRecord> steps;
  StopReason stop_reason = StopReason::max_steps;
  OneSidedSequence predictable_part;
  OneSidedSequence noise_part;
  double norm_x = 0.0;
};

/// Caches one projector per distinct band in the schedule.
class MultistepEngine {
 public:
  explicit MultistepEngine(MultistepConfig cfg);

  MultistepResult decompose(const OneSidedSequence& x) const;

  const MultistepConfig& config() const { return cfg_; }

 private:
  const LblProjector& projector_for(const Band& band) const;

  MultistepConfig cfg_;
  std::vector<std::pair<Band, LblProjector>> projectors_;
};

MultistepResult decompose(const OneSidedSequence& x, const MultistepConfig& cfg);

/// ||noise_part|| for stopped runs; max(||x_k||, ||y_k||) of the final step under MAX_STEPS.
double quantify_randomness(const MultistepResult& r);

}  // namespace pathnoise
