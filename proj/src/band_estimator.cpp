#include "pathnoise/band_estimator.hpp"

#include <cmath>

#include "pathnoise/errors.hpp"
#include "pathnoise/spectral.hpp"

namespace pathnoise {

std::vector<Band> candidate_arcs(double nu) {
  if (!(nu > 0.0 && nu < kTwoPi)) throw ValidationError("nu must lie in (0, 2 pi)");
  const auto count = static_cast<std::size_t>(std::ceil(kTwoPi / (nu / 3.0) - 1e-9));
  const double width = kTwoPi / static_cast<double>(count);
  std::vector<Band> arcs;
  arcs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    arcs.emplace_back(-kPi + (static_cast<double>(k) + 0.5) * width, width / 2.0);
  }
  return arcs;
}

BandEstimator::BandEstimator(double nu, EstimatorConfig cfg)
    : nu_(nu), cfg_(cfg), arcs_(candidate_arcs(nu)) {
  if (cfg_.window < 2) throw ValidationError("band estimator: window must be >= 2");
  if (!(cfg_.tol > 0.0)) throw ValidationError("band estimator: tol must be > 0");
  projectors_.reserve(arcs_.size());
  for (const Band& arc : arcs_) {
    const Band hypothesis = arc.complement();
    const int k = cfg_.coeff_range > 0
                      ? cfg_.coeff_range
                      : static_cast<int>(std::ceil(static_cast<double>(cfg_.window) *
                                                   hypothesis.half_width() / kPi)) +
                            16;
    projectors_.push_back(LblProjector::build(hypothesis, k, cfg_.window, cfg_.lambda));
  }
}

BandEstimate BandEstimator::estimate(const OneSidedSequence& x, std::int64_t tau_split) const {
  if (tau_split > 0) throw ValidationError("band estimator: tau_split must be <= 0");
  const std::size_t m = arcs_.size();
  const auto window = static_cast<std::int64_t>(cfg_.window);

  // Observations t = tau_split-window+1 .. tau_split, re-indexed to end at 0.
  ComplexVector obs(cfg_.window);
  for (std::int64_t j = 0; j < window; ++j) {
    obs[static_cast<std::size_t>(j)] = x.at(tau_split - window + 1 + j);
  }
  const OneSidedSequence observed(std::move(obs));
  const double norm = norms(observed).l2;

  std::vector<double> d(m, 0.0);
  if (norm > 0.0) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(m); ++k) {
      d[static_cast<std::size_t>(k)] = projectors_[static_cast<std::size_t>(k)].project(observed).residual / norm;
    }
  }

  std::size_t winner = 0;
  for (std::size_t k = 1; k < m; ++k) {
    if (d[k] < d[winner]) winner = k;
  }
  const bool ok = norm > 0.0 && d[winner] <= cfg_.tol;

  const Band i_hat = arcs_[winner].complement();
  const double c = i_hat.center();
  const double omega_c = c > 0.0 ? c - kPi : c + kPi;

  Band refined = i_hat;
  if (ok) {
    const auto passes = [&](std::size_t k) { return d[k] <= cfg_.tol; };
    std::size_t left = 0, right = 0;
    while (left + right + 1 < m && passes((winner + m - left - 1) % m)) ++left;
    while (left + right + 1 < m && passes((winner + right + 1) % m)) ++right;
    const std::size_t run = left + right + 1;
    if (run < m) {
      const double width = kTwoPi / static_cast<double>(m);
      const double start = -kPi + (static_cast<double>(winner) - static_cast<double>(left)) * width;
      const Band excluded(start + 0.5 * static_cast<double>(run) * width,
                          0.5 * static_cast<double>(run) * width);
      refined = excluded.complement();
    }
  }

  std::vector<CandidateResidual> table;
  table.reserve(m);
  for (std::size_t k = 0; k < m; ++k) table.push_back({arcs_[k], arcs_[k].complement(), d[k]});

  return BandEstimate{i_hat,  omega_c,    refined,   std::move(table),
                      winner, nu_,        nu_ / 3.0, ok ? BandStatus::ok : BandStatus::ambiguous};
}

BandEstimate estimate_band(const OneSidedSequence& x, double nu, std::int64_t tau_split,
                           const EstimatorConfig& cfg) {
  return BandEstimator(nu, cfg).estimate(x, tau_split);
}

const char* to_string(BandStatus status) {
  return status == BandStatus::ok ? "OK" : "AMBIGUOUS";
}

}  // namespace pathnoise
