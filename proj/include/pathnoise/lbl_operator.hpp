#pragma once

// One-sided machinery: the sinc synthesis operator Q, its adjoint, the Gram
// operator R = Q*Q, and the projection P_I = p_{omega_I} Q R^{-1} Q* p_{-omega_I}
// onto left-band-limited sequences.
//
// All truncated operators live on coefficients k = -K..K and times t = -T+1..0.
// The truncated synthesis matrix is numerically rank deficient (the k < 0
// columns only see 1/t tails on t <= 0), so R^{-1} is applied as a
// pseudoinverse through a thin SVD of the synthesis matrix: R = V S^2 V^T.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "pathnoise/types.hpp"

namespace pathnoise {

inline constexpr int kDefaultCoeffRange = 32;
inline constexpr std::size_t kDefaultHorizon = 4096;

/// Singular values below this fraction of the largest are treated as zero.
inline constexpr double kRankTolerance = 1e-10;

struct ProjectorConfig {
  double omega_I = 0.0;
  double Omega = kPi / 2.0;
  int K = kDefaultCoeffRange;
  std::size_t T = kDefaultHorizon;
  double lambda = 0.0;

  Band band() const { return Band(omega_I, Omega); }
};

/// (Q y)(t) = (Omega/pi) sum_k y_k sinc(k pi + Omega t), t = t_first..t_last.
/// y holds k = -K..K, so y.size() must be odd.
TwoSidedSequence q_apply(std::span<const Complex> y, double half_width, std::int64_t t_first,
                         std::int64_t t_last);

/// (Q* x)_k = (Omega/pi) sum_{j=-T+1..0} sinc(k pi + Omega j) x(j), k = -K..K.
ComplexVector q_adjoint(const OneSidedSequence& x, double half_width, int coeff_range);

struct ProjectionResult {
  OneSidedSequence x_hat;
  ComplexVector coefficients;  ///< y_hat on k = -K..K
  double residual = 0.0;       ///< ||x - x_hat||
  double norm_x = 0.0;
  std::optional<TwoSidedSequence> extrapolation;  ///< t = 1..H
  bool contraction_violated = false;  ///< residual > ||x|| + 1e-9 (should never happen)
};

struct MembershipResult {
  bool member = false;
  double residual = 0.0;
  double relative_residual = 0.0;
};

class LblProjector {
 public:
  static LblProjector build(const Band& band, int coeff_range = kDefaultCoeffRange,
                            std::size_t horizon = kDefaultHorizon, double lambda = 0.0);
  static LblProjector build(const ProjectorConfig& cfg) {
    return build(cfg.band(), cfg.K, cfg.T, cfg.lambda);
  }

  const Band& band() const { return band_; }
  int coeff_range() const { return coeff_range_; }
  std::size_t horizon() const { return horizon_; }
  double lambda() const { return lambda_; }
  ProjectorConfig config() const;

  /// Truncated Gram matrix R, (2K+1) x (2K+1), real symmetric.
  const Eigen::MatrixXd& gram() const { return gram_; }
  /// Centered-band synthesis matrix, T x (2K+1); row r is time t = r - T + 1.
  const Eigen::MatrixXd& synthesis() const { return synthesis_; }
  const Eigen::VectorXd& singular_values() const { return singular_values_; }
  /// Number of singular directions kept by the pseudoinverse.
  Eigen::Index rank() const { return rank_; }
  bool rank_truncated() const { return rank_ < synthesis_.cols(); }

  /// Q* p_{-omega_I} x, with x zero-padded to the projector horizon.
  ComplexVector adjoint(const OneSidedSequence& x) const;

  ProjectionResult project(const OneSidedSequence& x, std::size_t extrapolate = 0) const;

  /// e^{i omega_I t} (Omega/pi) sum_k y_k sinc(k pi + Omega t) on t_first..t_last.
  TwoSidedSequence synthesize(std::span<const Complex> y, std::int64_t t_first,
                              std::int64_t t_last) const;

 private:
  LblProjector(Band band, int coeff_range, std::size_t horizon, double lambda);

  OneSidedSequence checked_input(const OneSidedSequence& x) const;

  Band band_;
  int coeff_range_;
  std::size_t horizon_;
  double lambda_;
  Eigen::MatrixXd synthesis_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd left_;   // U, T x rank
  Eigen::MatrixXd right_;  // V, (2K+1) x rank
  Eigen::VectorXd singular_values_;
  Eigen::VectorXd filter_;  // per kept direction: s^2/(s^2+lambda), 1 when lambda = 0
  Eigen::Index rank_ = 0;
};

LblProjector build_projector(const Band& band, int coeff_range = kDefaultCoeffRange,
                             std::size_t horizon = kDefaultHorizon, double lambda = 0.0);

ProjectionResult project(const LblProjector& p, const OneSidedSequence& x,
                         std::size_t extrapolate = 0);

/// ||x - P_I x|| <= tol ||x||; the zero sequence is a member.
MembershipResult is_left_bandlimited(const LblProjector& p, const OneSidedSequence& x,
                                     double tol = 1e-6);

/// Unit-norm x with Q* p_{-omega_I} x = 0 (to 1e-8), hence P_I x = 0.
/// Requires T > 2K+1.
OneSidedSequence find_annihilated(const LblProjector& p);

}  // namespace pathnoise
