#include "pathnoise/kernels.hpp"

#include <cmath>

#include "pathnoise/spectral.hpp"

namespace pathnoise::kernels {

namespace {

Complex transform_at(std::int64_t t_min, std::span<const Complex> x, double omega) {
  Complex acc{};
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double t = static_cast<double>(t_min + static_cast<std::int64_t>(j));
    acc += x[j] * std::polar(1.0, -omega * t);
  }
  return acc;
}

Complex inverse_at(std::span<const Complex> spectrum, double t) {
  const std::size_t n_grid = spectrum.size();
  Complex acc{};
  for (std::size_t n = 0; n < n_grid; ++n) {
    acc += spectrum[n] * std::polar(1.0, SpectrumGrid::frequency(n, n_grid) * t);
  }
  return acc / static_cast<double>(n_grid);
}

double design_residual(std::span<const Complex> taps, double omega) {
  Complex k{};
  for (std::size_t j = 0; j < taps.size(); ++j) {
    k += taps[j] * std::polar(1.0, -omega * static_cast<double>(j + 1));
  }
  return std::abs(Complex(1.0) - k);
}

}  // namespace

void ztransform(std::int64_t t_min, std::span<const Complex> x, std::span<Complex> out,
                Exec exec) {
  const auto n_grid = static_cast<std::ptrdiff_t>(out.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t n = 0; n < n_grid; ++n) {
      out[n] = transform_at(t_min, x, SpectrumGrid::frequency(n, out.size()));
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < n_grid; ++n) {
    out[n] = transform_at(t_min, x, SpectrumGrid::frequency(n, out.size()));
  }
}

void inverse_ztransform(std::span<const Complex> spectrum, std::int64_t t_min,
                        std::span<Complex> out, Exec exec) {
  const auto count = static_cast<std::ptrdiff_t>(out.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      out[j] = inverse_at(spectrum, static_cast<double>(t_min + j));
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    out[j] = inverse_at(spectrum, static_cast<double>(t_min + j));
  }
}

Eigen::MatrixXd sinc_matrix(double half_width, int coeff_range, std::int64_t t_first,
                            std::size_t rows, Exec exec) {
  const Eigen::Index cols = 2 * coeff_range + 1;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows), cols);
  const double scale = half_width / kPi;
  // Column-major: parallelize over columns so each thread writes contiguous memory.
  auto fill_column = [&](Eigen::Index c) {
    const double kpi = static_cast<double>(c - coeff_range) * kPi;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      const double t = static_cast<double>(t_first + r);
      a(r, c) = scale * sinc(kpi + half_width * t);
    }
  };
  if (exec == Exec::serial) {
    for (Eigen::Index c = 0; c < cols; ++c) fill_column(c);
  } else {
#pragma omp parallel for schedule(static)
    for (Eigen::Index c = 0; c < cols; ++c) fill_column(c);
  }
  return a;
}

double one_step_design_error(std::span<const Complex> taps, std::span<const double> omegas,
                             Exec exec) {
  const auto count = static_cast<std::ptrdiff_t>(omegas.size());
  double worst = 0.0;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) worst = std::max(worst, design_residual(taps, omegas[i]));
    return worst;
  }
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < count; ++i) worst = std::max(worst, design_residual(taps, omegas[i]));
  return worst;
}

}  // namespace pathnoise::kernels
