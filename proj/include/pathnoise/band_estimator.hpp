#pragma once

// Estimation of the spectral support arc of a left-band-limited sequence from
// its deep past {t <= tau_split}. A family of M equal arcs I_k covers the
// circle; each hypothesis "the spectrum avoids I_k" is tested by projecting
// onto the complement arc and measuring the relative residual d_k.

#include <cstdint>
#include <optional>
#include <vector>

#include "pathnoise/lbl_operator.hpp"
#include "pathnoise/types.hpp"

namespace pathnoise {

struct EstimatorConfig {
  std::size_t window = 256;  ///< samples t = tau_split-window+1 .. tau_split
  int coeff_range = 0;       ///< 0: ceil(window * Omega_hat / pi) + 16
  double lambda = 0.0;
  double tol = 1e-3;         ///< winning d_m must not exceed this
};

enum class BandStatus { ok, ambiguous };

struct CandidateResidual {
  Band excluded;    ///< I_k
  Band hypothesis;  ///< complement of I_k
  double d = 0.0;
};

struct BandEstimate {
  Band I_hat;              ///< complement of the winning arc
  double omega_c_hat = 0;  ///< center of the winning excluded arc, in (-pi, pi]
  Band refined;            ///< complement of the contiguous run of passing arcs around the winner
  std::vector<CandidateResidual> residuals;
  std::size_t winner = 0;
  double nu = 0.0;
  double nu_hat = 0.0;  ///< nu / 3
  BandStatus status = BandStatus::ambiguous;
};

/// Candidate count M = ceil(2 pi / (nu/3)); arcs are laid edge to edge from -pi.
std::vector<Band> candidate_arcs(double nu);

/// Holds one projector per candidate so repeated estimates reuse factorizations.
class BandEstimator {
 public:
  BandEstimator(double nu, EstimatorConfig cfg = {});

  BandEstimate estimate(const OneSidedSequence& x, std::int64_t tau_split = 0) const;

  double nu() const { return nu_; }
  const EstimatorConfig& config() const { return cfg_; }
  std::size_t candidate_count() const { return arcs_.size(); }
  const std::vector<LblProjector>& projectors() const { return projectors_; }

 private:
  double nu_;
  EstimatorConfig cfg_;
  std::vector<Band> arcs_;
  std::vector<LblProjector> projectors_;
};

BandEstimate estimate_band(const OneSidedSequence& x, double nu, std::int64_t tau_split = 0,
                           const EstimatorConfig& cfg = {});

const char* to_string(BandStatus status);

}  // namespace pathnoise
