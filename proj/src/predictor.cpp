#include "pathnoise/predictor.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "pathnoise/errors.hpp"
#include "pathnoise/kernels.hpp"
#include "pathnoise/spectral.hpp"

namespace pathnoise {

namespace {

// Relative eigenvalue cutoff for the tap Gram matrix (a prolate matrix, so its
// spectrum collapses to rounding level quickly as L grows).
constexpr double kGramTolerance = 1e-15;

ComplexVector solve_taps(double half_width, std::size_t length, double lambda) {
  const auto n = static_cast<Eigen::Index>(length);
  Eigen::MatrixXd gram(n, n);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      gram(a, b) = 2.0 * half_width * sinc(half_width * static_cast<double>(a - b));
    }
    rhs(a) = 2.0 * half_width * sinc(half_width * static_cast<double>(a + 1));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success) throw NumericalError("design: eigensolver failed");
  const Eigen::VectorXd& mu = eig.eigenvalues();
  const double top = mu.maxCoeff();
  const Eigen::VectorXd proj = eig.eigenvectors().transpose() * rhs;
  Eigen::VectorXd scaled = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (mu(i) > kGramTolerance * top) scaled(i) = proj(i) / (mu(i) + lambda);
  }
  const Eigen::VectorXd taps = eig.eigenvectors() * scaled;
  return ComplexVector(taps.begin(), taps.end());
}

double design_error_of(const ComplexVector& taps, double half_width) {
  std::vector<double> omegas(kDesignErrorGrid + 1);
  for (std::size_t i = 0; i <= kDesignErrorGrid; ++i) {
    omegas[i] = -half_width + 2.0 * half_width * static_cast<double>(i) /
                                  static_cast<double>(kDesignErrorGrid);
  }
  return kernels::one_step_design_error(taps, omegas);
}

Complex predict_from(const FirPredictor& p, std::int64_t t, auto&& history) {
  const double w = p.band.center();
  Complex acc{};
  for (std::size_t j = 1; j <= p.taps.size(); ++j) {
    const std::int64_t s = t - static_cast<std::int64_t>(j);
    acc += p.taps[j - 1] * std::polar(1.0, -w * static_cast<double>(s)) * history(s);
  }
  return std::polar(1.0, w * static_cast<double>(t)) * acc;
}

}  // namespace

FirPredictor design_predictor(const Band& band, std::size_t length, double lambda) {
  if (length < 1) throw ValidationError("design: L must be >= 1");
  if (!(lambda >= 0.0)) throw ValidationError("design: lambda must be >= 0");
  ComplexVector taps = solve_taps(band.half_width(), length, lambda);
  const double err = design_error_of(taps, band.half_width());
  return FirPredictor{band, std::move(taps), err};
}

FirPredictor design_full_band(std::size_t length) {
  if (length < 1) throw ValidationError("design: L must be >= 1");
  ComplexVector taps = solve_taps(kPi, length, 0.0);
  const double err = design_error_of(taps, kPi);
  // A Band cannot span the whole circle; the record keeps the widest arc.
  return FirPredictor{Band(0.0, std::nextafter(kPi, 0.0)), std::move(taps), err};
}

Complex predict_one_step(const FirPredictor& p, const TwoSidedSequence& x, std::int64_t t) {
  return predict_from(p, t, [&](std::int64_t s) { return x.at(s); });
}

TwoSidedSequence predict_one_step_series(const FirPredictor& p, const TwoSidedSequence& x,
                                         std::int64_t t_first, std::int64_t t_last) {
  if (t_last < t_first) throw ValidationError("predict: empty time range");
  ComplexVector out(static_cast<std::size_t>(t_last - t_first + 1));
  const auto count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = predict_one_step(p, x, t_first + i);
  return TwoSidedSequence(t_first, std::move(out));
}

PredictionRun predict_with_estimated_band(const OneSidedSequence& x, const PredictRequest& req) {
  if (req.tau_split >= 0) throw ValidationError("predict: tau_split must be < 0");
  if (req.taps < 1) throw ValidationError("predict: L must be >= 1");

  BandEstimate est = BandEstimator(req.nu, req.estimator).estimate(x, req.tau_split);
  if (est.status != BandStatus::ok) {
    throw AmbiguousBandError("band estimate is AMBIGUOUS; no prediction emitted");
  }
  const Band band = req.half_width ? Band(est.refined.center(), *req.half_width) : est.refined;
  FirPredictor predictor = design_predictor(band, req.taps);

  // History: observed tau_split < s <= 0, then predictions for s >= 1.
  ComplexVector future(req.horizon);
  const auto history = [&](std::int64_t s) -> Complex {
    if (s <= req.tau_split) return {};
    if (s <= 0) return x.at(s);
    return future[static_cast<std::size_t>(s - 1)];
  };
  std::vector<std::size_t> pseudo(req.horizon);
  for (std::size_t h = 1; h <= req.horizon; ++h) {
    const auto t = static_cast<std::int64_t>(h);
    future[h - 1] = predict_from(predictor, t, history);
    pseudo[h - 1] = std::min(h - 1, predictor.length());
  }
  return PredictionRun{std::move(est), std::move(predictor), std::move(future), std::move(pseudo)};
}

}  // namespace pathnoise
