#include "pathnoise/two_sided.hpp"

#include <cmath>

#include "pathnoise/errors.hpp"

namespace pathnoise {

SigmaReport sigma_of(const SpectrumGrid& spectrum) {
  SigmaReport r;
  r.grid_size = spectrum.size();
  std::size_t arg = 0;
  double best = std::abs(spectrum[0]);
  for (std::size_t n = 1; n < spectrum.size(); ++n) {
    const double a = std::abs(spectrum[n]);
    if (a < best) {
      best = a;
      arg = n;
    }
  }
  r.sigma = best;
  r.omega0 = spectrum.frequency(arg);
  const double l1 = norms(spectrum).l1;
  r.normalized_ratio = l1 > 0.0 ? kTwoPi * best / l1 : 0.0;
  return r;
}

SigmaReport sigma_of(const TwoSidedSequence& x, std::size_t grid_size) {
  return sigma_of(ztransform(x, grid_size));
}

bool ChordArc::contains(double omega) const {
  return std::abs(std::polar(1.0, omega) - std::polar(1.0, center)) <= epsilon;
}

double ChordArc::half_width() const {
  if (epsilon >= 2.0) return kPi;
  return 2.0 * std::asin(epsilon / 2.0);
}

TwoSidedSequence GammaDecomposition::noise_sequence(std::int64_t t_min,
                                                    std::int64_t t_max) const {
  return inverse_ztransform(noise, t_min, t_max);
}

TwoSidedSequence GammaDecomposition::predictable_sequence(std::int64_t t_min,
                                                          std::int64_t t_max) const {
  return inverse_ztransform(predictable, t_min, t_max);
}

GammaDecomposition gamma_decompose(const SpectrumGrid& spectrum, double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("gamma_decompose: epsilon must be a finite nonnegative number");
  }
  const SigmaReport s = sigma_of(spectrum);
  const std::size_t n_grid = spectrum.size();
  std::optional<ChordArc> arc;
  if (epsilon > 0.0) arc = ChordArc{s.omega0, epsilon};

  ComplexVector y(n_grid), noise(n_grid);
  const bool degenerate = s.sigma == 0.0 && epsilon == 0.0;
  for (std::size_t n = 0; n < n_grid; ++n) {
    const Complex x = spectrum[n];
    double gamma = 0.0;
    if (degenerate) {
      gamma = 0.0;
    } else if (arc && arc->contains(spectrum.frequency(n))) {
      gamma = 1.0;
    } else if (s.sigma > 0.0) {
      gamma = s.sigma / std::abs(x);
    }
    noise[n] = gamma * x;
    y[n] = x - noise[n];
  }
  return GammaDecomposition{SpectrumGrid(std::move(y)), SpectrumGrid(std::move(noise)),
                            s.sigma, s.omega0, epsilon, arc, degenerate};
}

GammaDecomposition gamma_decompose(const TwoSidedSequence& x, double epsilon,
                                   std::size_t grid_size) {
  return gamma_decompose(ztransform(x, grid_size), epsilon);
}

RecoveryReport recover_missing(const TwoSidedSequence& observed, std::int64_t m,
                               std::size_t grid_size, std::optional<RecoveryClass> cls) {
  // Drop whatever is stored at m: it is the unobserved sample.
  ComplexVector values(observed.values().begin(), observed.values().end());
  if (m >= observed.t_min() && m <= observed.t_max()) {
    values[static_cast<std::size_t>(m - observed.t_min())] = 0.0;
  }
  const TwoSidedSequence y_seq(observed.t_min(), std::move(values));

  RecoveryReport r;
  r.m = m;
  Complex y_at_omega0;
  if (cls) {
    if (!(cls->sigma >= 0.0)) throw ValidationError("recover_missing: sigma must be >= 0");
    r.omega0 = wrap_angle(cls->omega0);
    y_at_omega0 = evaluate_transform(y_seq, r.omega0);
    r.worst_case_error = cls->sigma;
    r.class_supplied = true;
  } else {
    const SpectrumGrid y = ztransform(y_seq, grid_size);
    double best = std::abs(y[0]);
    for (std::size_t n = 1; n < y.size(); ++n) best = std::min(best, std::abs(y[n]));
    const double threshold = best * (1.0 + 1e-12);
    std::size_t arg = 0;
    for (std::size_t n = 0; n < y.size(); ++n) {
      if (std::abs(y[n]) <= threshold) arg = n;
    }
    r.omega0 = y.frequency(arg);
    y_at_omega0 = y[arg];
    r.worst_case_error = std::abs(y_at_omega0);
  }
  r.estimate = -std::polar(1.0, r.omega0 * static_cast<double>(m)) * y_at_omega0;
  return r;
}

}  // namespace pathnoise
