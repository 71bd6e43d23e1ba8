#include "pathnoise/lbl_operator.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "pathnoise/errors.hpp"
#include "pathnoise/kernels.hpp"
#include "pathnoise/spectral.hpp"

namespace pathnoise {

namespace {

Eigen::VectorXcd to_eigen(std::span<const Complex> v) {
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

ComplexVector to_std(const Eigen::VectorXcd& v) { return ComplexVector(v.begin(), v.end()); }

// Real matrix times complex vector, split into real and imaginary parts.
Eigen::VectorXcd mul(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(m.rows());
  out.real() = m * v.real();
  out.imag() = m * v.imag();
  return out;
}

Eigen::VectorXcd mul_transposed(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(m.cols());
  out.real() = m.transpose() * v.real();
  out.imag() = m.transpose() * v.imag();
  return out;
}

void check_half_width(double half_width) {
  if (!(half_width > 0.0 && half_width < kPi)) {
    throw ValidationError("half-width Omega must lie in (0, pi)");
  }
}

int coeff_range_of(std::size_t size) {
  if (size % 2 == 0) throw ValidationError("coefficient vector must have odd length 2K+1");
  return static_cast<int>((size - 1) / 2);
}

}  // namespace

TwoSidedSequence q_apply(std::span<const Complex> y, double half_width, std::int64_t t_first,
                         std::int64_t t_last) {
  check_half_width(half_width);
  if (t_last < t_first) throw ValidationError("q_apply: empty time range");
  const int k = coeff_range_of(y.size());
  const auto rows = static_cast<std::size_t>(t_last - t_first + 1);
  const Eigen::MatrixXd a = kernels::sinc_matrix(half_width, k, t_first, rows);
  return TwoSidedSequence(t_first, to_std(mul(a, to_eigen(y))));
}

ComplexVector q_adjoint(const OneSidedSequence& x, double half_width, int coeff_range) {
  check_half_width(half_width);
  if (coeff_range < 0) throw ValidationError("q_adjoint: K must be >= 0");
  const std::size_t T = x.horizon();
  const Eigen::MatrixXd a =
      kernels::sinc_matrix(half_width, coeff_range, -static_cast<std::int64_t>(T) + 1, T);
  return to_std(mul_transposed(a, to_eigen(x.values())));
}

LblProjector::LblProjector(Band band, int coeff_range, std::size_t horizon, double lambda)
    : band_(band), coeff_range_(coeff_range), horizon_(horizon), lambda_(lambda) {}

LblProjector LblProjector::build(const Band& band, int coeff_range, std::size_t horizon,
                                 double lambda) {
  if (coeff_range < 1) throw ValidationError("build_projector: K must be >= 1");
  if (horizon < 1) throw ValidationError("build_projector: T must be >= 1");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("build_projector: lambda must be a finite nonnegative number");
  }
  LblProjector p(band, coeff_range, horizon, lambda);
  const auto T = static_cast<std::int64_t>(horizon);
  p.synthesis_ = kernels::sinc_matrix(band.half_width(), coeff_range, -T + 1, horizon);

  const Eigen::Index n = p.synthesis_.cols();
  p.gram_ = Eigen::MatrixXd::Zero(n, n);
  p.gram_.selfadjointView<Eigen::Lower>().rankUpdate(p.synthesis_.transpose());
  p.gram_ = p.gram_.selfadjointView<Eigen::Lower>();

  Eigen::BDCSVD<Eigen::MatrixXd> svd(p.synthesis_, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("build_projector: SVD of the synthesis matrix failed");
  }
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0 || !(s(0) > 0.0)) {
    throw NumericalError("build_projector: synthesis matrix is zero");
  }
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > kRankTolerance * s(0)) ++rank;
  p.rank_ = rank;
  p.singular_values_ = s;
  p.left_ = svd.matrixU().leftCols(rank);
  p.right_ = svd.matrixV().leftCols(rank);
  p.filter_ = Eigen::VectorXd::Ones(rank);
  if (lambda > 0.0) {
    for (Eigen::Index i = 0; i < rank; ++i) p.filter_(i) = s(i) * s(i) / (s(i) * s(i) + lambda);
  }
  return p;
}

ProjectorConfig LblProjector::config() const {
  return ProjectorConfig{band_.center(), band_.half_width(), coeff_range_, horizon_, lambda_};
}

OneSidedSequence LblProjector::checked_input(const OneSidedSequence& x) const {
  if (x.horizon() > horizon_) {
    throw ValidationError("projector: input horizon " + std::to_string(x.horizon()) +
                          " exceeds T = " + std::to_string(horizon_));
  }
  return modulate(x.padded(horizon_), -band_.center());
}

ComplexVector LblProjector::adjoint(const OneSidedSequence& x) const {
  const OneSidedSequence centered = checked_input(x);
  return to_std(mul_transposed(synthesis_, to_eigen(centered.values())));
}

ProjectionResult LblProjector::project(const OneSidedSequence& x, std::size_t extrapolate) const {
  const OneSidedSequence centered = checked_input(x);
  const Eigen::VectorXcd xc = to_eigen(centered.values());

  const Eigen::VectorXcd c = mul_transposed(left_, xc);
  const Eigen::VectorXcd d = filter_.cast<Complex>().cwiseProduct(c);
  const Eigen::VectorXcd x_hat_centered = mul(left_, d);
  const Eigen::VectorXcd y =
      mul(right_, d.cwiseQuotient(singular_values_.head(rank_).cast<Complex>()));

  OneSidedSequence x_hat = modulate(OneSidedSequence(to_std(x_hat_centered)), band_.center());
  const OneSidedSequence padded = x.padded(horizon_);
  ComplexVector diff(horizon_);
  for (std::size_t j = 0; j < horizon_; ++j) diff[j] = padded.values()[j] - x_hat.values()[j];

  ProjectionResult r{std::move(x_hat), to_std(y), l2_norm(diff), l2_norm(padded.values()),
                     std::nullopt, false};
  r.contraction_violated = r.residual > r.norm_x + 1e-9;
  if (extrapolate > 0) {
    r.extrapolation = synthesize(r.coefficients, 1, static_cast<std::int64_t>(extrapolate));
  }
  return r;
}

TwoSidedSequence LblProjector::synthesize(std::span<const Complex> y, std::int64_t t_first,
                                          std::int64_t t_last) const {
  if (static_cast<Eigen::Index>(y.size()) != synthesis_.cols()) {
    throw ValidationError("synthesize: coefficient vector must have length 2K+1");
  }
  return modulate(q_apply(y, band_.half_width(), t_first, t_last), band_.center());
}

LblProjector build_projector(const Band& band, int coeff_range, std::size_t horizon,
                             double lambda) {
  return LblProjector::build(band, coeff_range, horizon, lambda);
}

ProjectionResult project(const LblProjector& p, const OneSidedSequence& x,
                         std::size_t extrapolate) {
  return p.project(x, extrapolate);
}

MembershipResult is_left_bandlimited(const LblProjector& p, const OneSidedSequence& x,
                                     double tol) {
  const ProjectionResult r = p.project(x);
  MembershipResult m;
  m.residual = r.residual;
  if (r.norm_x == 0.0) {
    m.member = true;
    return m;
  }
  m.relative_residual = r.residual / r.norm_x;
  m.member = m.relative_residual <= tol;
  return m;
}

OneSidedSequence find_annihilated(const LblProjector& p) {
  const Eigen::MatrixXd& a = p.synthesis();
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (rows <= cols) {
    throw ValidationError("find_annihilated: requires T > 2K+1 (T = " + std::to_string(rows) +
                          ", 2K+1 = " + std::to_string(cols) + ")");
  }
  // Column `cols` of the full Householder Q is orthogonal to range(A).
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::VectorXd witness = qr.householderQ() * Eigen::VectorXd::Unit(rows, cols);
  const double image = (a.transpose() * witness).norm();
  if (!(image <= 1e-8)) {
    throw NumericalError("find_annihilated: kernel witness not certified (|Q* x| = " +
                         std::to_string(image) + ")");
  }
  ComplexVector values(static_cast<std::size_t>(rows));
  const double n = witness.norm();
  for (Eigen::Index i = 0; i < rows; ++i) values[static_cast<std::size_t>(i)] = witness(i) / n;
  return modulate(OneSidedSequence(std::move(values)), p.band().center());
}

}  // namespace pathnoise
