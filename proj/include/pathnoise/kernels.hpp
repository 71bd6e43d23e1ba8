#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version with identical per-element arithmetic; tests compare the two.

#include <Eigen/Dense>
#include <cstdint>
#include <span>

#include "pathnoise/types.hpp"

namespace pathnoise::kernels {

enum class Exec { serial, parallel };

/// X_n = sum_t x(t) e^{-i omega_n t} on the standard grid of size out.size().
void ztransform(std::int64_t t_min, std::span<const Complex> x, std::span<Complex> out,
                Exec exec = Exec::parallel);

/// x(t) = (1/N) sum_n X_n e^{i omega_n t} for t = t_min .. t_min+out.size()-1.
void inverse_ztransform(std::span<const Complex> spectrum, std::int64_t t_min,
                        std::span<Complex> out, Exec exec = Exec::parallel);

/// Sinc synthesis matrix: entry (r, c) = (Omega/pi) sinc((c-K) pi + Omega (t_first + r)).
/// Rows are consecutive times starting at t_first, columns are k = -K..K.
Eigen::MatrixXd sinc_matrix(double half_width, int coeff_range, std::int64_t t_first,
                            std::size_t rows, Exec exec = Exec::parallel);

/// Evaluates a trigonometric polynomial sum_j taps[j] e^{-i omega (j+1)} on the
/// given frequencies and returns max |1 - value|.
double one_step_design_error(std::span<const Complex> taps, std::span<const double> omegas,
                             Exec exec = Exec::parallel);

}  // namespace pathnoise::kernels
