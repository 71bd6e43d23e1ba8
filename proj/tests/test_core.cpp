#include <cmath>
#include <random>

#include "doctest.h"
#include "pathnoise/errors.hpp"
#include "pathnoise/kernels.hpp"
#include "pathnoise/spectral.hpp"
#include "support.hpp"

using namespace pathnoise;

TEST_CASE("grid frequencies end exactly at pi") {
  for (std::size_t n : {2u, 7u, 64u, 4096u}) {
    CHECK(SpectrumGrid::frequency(n - 1, n) == kPi);
    CHECK(SpectrumGrid::frequency(0, n) == doctest::Approx(-kPi + kTwoPi / n).epsilon(1e-15));
  }
  const auto w = SpectrumGrid::frequencies(8);
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] > w[i - 1]);
}

TEST_CASE("sinc") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(std::abs(sinc(kPi)) < 1e-16);
  CHECK(sinc(1e-3) == doctest::Approx(std::sin(1e-3) / 1e-3));
}

TEST_CASE("wrap_angle maps into (-pi, pi]") {
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3 * kPi / 2) == doctest::Approx(-kPi / 2));
  CHECK(wrap_angle(0.25) == 0.25);
}

TEST_CASE("ztransform matches direct long-double summation") {
  std::mt19937_64 rng(11);
  const auto v = oracle::random_vector(rng, 23);
  const TwoSidedSequence x(-9, v);
  const SpectrumGrid X = ztransform(x, 257);
  for (std::size_t n = 0; n < X.size(); ++n) {
    const Complex ref = oracle::transform(-9, v, X.frequency(n));
    CHECK(std::abs(X[n] - ref) < 1e-12);
  }
  CHECK(std::abs(evaluate_transform(x, 0.3) - oracle::transform(-9, v, 0.3)) < 1e-12);
}

TEST_CASE("inverse transform recovers short support and Parseval holds") {
  std::mt19937_64 rng(12);
  const auto v = oracle::random_vector(rng, 17);
  const TwoSidedSequence x(-5, v);
  const SpectrumGrid X = ztransform(x, 64);
  const TwoSidedSequence back = inverse_ztransform(X, -8, 14);
  for (std::int64_t t = -8; t <= 14; ++t) CHECK(std::abs(back.at(t) - x.at(t)) < 1e-12);

  double energy = 0;
  for (const auto& c : X.values()) energy += std::norm(c);
  CHECK(energy / 64.0 == doctest::Approx(std::pow(norms(x).l2, 2)).epsilon(1e-12));
}

TEST_CASE("modulation shifts the spectrum") {
  std::mt19937_64 rng(13);
  const TwoSidedSequence x(-3, oracle::random_vector(rng, 9));
  const double w0 = 0.9;
  const TwoSidedSequence mx = modulate(x, w0);
  for (double w : {-2.0, 0.1, 1.4}) {
    CHECK(std::abs(evaluate_transform(mx, w) - evaluate_transform(x, w - w0)) < 1e-12);
  }
  const OneSidedSequence o(oracle::random_vector(rng, 5));
  const OneSidedSequence mo = modulate(o, w0);
  for (std::int64_t t = -4; t <= 0; ++t) {
    CHECK(std::abs(mo.at(t) - std::polar(1.0, w0 * t) * o.at(t)) < 1e-15);
  }
}

TEST_CASE("sequence and grid norms") {
  const TwoSidedSequence x(0, {Complex(3, 4), Complex(0, -1)});
  const auto n = norms(x);
  CHECK(n.l1 == doctest::Approx(6.0));
  CHECK(n.l2 == doctest::Approx(std::sqrt(26.0)));
  CHECK(n.linf == doctest::Approx(5.0));
  const auto g = norms(ztransform(TwoSidedSequence::impulse(4), 128));
  CHECK(g.l1 == doctest::Approx(kTwoPi));
  CHECK(g.linf == doctest::Approx(1.0));
}

TEST_CASE("sequences: windows, one-sided indexing and validation") {
  const TwoSidedSequence x(-1, {1.0, 2.0, 3.0});
  CHECK(x.at(-2) == Complex(0));
  CHECK(x.at(1) == Complex(3));
  const auto w = x.window(-3, 0);
  CHECK(w.size() == 4);
  CHECK(w.at(-1) == Complex(1));
  CHECK(w.at(1) == Complex(0));

  const OneSidedSequence o({1.0, 2.0, 3.0});
  CHECK(o.at(0) == Complex(3));
  CHECK(o.at(-2) == Complex(1));
  CHECK(o.at(-3) == Complex(0));
  CHECK(o.padded(5).at(-4) == Complex(0));
  CHECK(o.padded(5).at(0) == Complex(3));
  CHECK(o.recent(2).at(-1) == Complex(2));
  CHECK(o.as_two_sided().t_min() == -2);
  CHECK(OneSidedSequence::from_two_sided(x, 4).at(0) == Complex(2));

  CHECK_THROWS_AS(TwoSidedSequence(0, {Complex(std::nan(""), 0)}), ValidationError);
  CHECK_THROWS_AS(ztransform(x, 1), ValidationError);
  CHECK_THROWS_AS(SpectrumGrid(ComplexVector(1)), ValidationError);
}

TEST_CASE("band arcs are half-open and wrap around") {
  const Band b(0.5, 0.25);
  CHECK(b.contains(0.25));
  CHECK_FALSE(b.contains(0.75));
  CHECK(b.contains(0.6));
  CHECK(b.measure() == doctest::Approx(0.5));

  const Band edge(kPi - 0.1, 0.2);
  CHECK(edge.contains(kPi));
  CHECK(edge.contains(-kPi + 0.05));

  const Band c = b.complement();
  CHECK(c.half_width() == doctest::Approx(kPi - 0.25));
  for (double w : {-3.0, -1.0, 0.0, 0.3, 0.7, 2.0, 3.1}) CHECK(b.contains(w) != c.contains(w));

  CHECK(Band(0, 1).contains_arc(Band(0.2, 0.5)));
  CHECK_FALSE(Band(0, 1).contains_arc(Band(0.8, 0.5)));
  CHECK_THROWS_AS(Band(0, 0), ValidationError);
  CHECK_THROWS_AS(Band(0, kPi), ValidationError);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  using kernels::Exec;
  std::mt19937_64 rng(14);
  const auto v = oracle::random_vector(rng, 300);

  ComplexVector a(1024), b(1024);
  kernels::ztransform(-150, v, a, Exec::serial);
  kernels::ztransform(-150, v, b, Exec::parallel);
  CHECK(a == b);

  ComplexVector ia(200), ib(200);
  kernels::inverse_ztransform(a, -100, ia, Exec::serial);
  kernels::inverse_ztransform(a, -100, ib, Exec::parallel);
  CHECK(ia == ib);

  const Eigen::MatrixXd sa = kernels::sinc_matrix(1.1, 12, -299, 300, Exec::serial);
  const Eigen::MatrixXd sb = kernels::sinc_matrix(1.1, 12, -299, 300, Exec::parallel);
  CHECK(sa == sb);
  CHECK(sa(299, 12) == doctest::Approx(1.1 / kPi));

  const auto taps = oracle::random_vector(rng, 16);
  const auto omegas = SpectrumGrid::frequencies(999);
  CHECK(kernels::one_step_design_error(taps, omegas, Exec::serial) ==
        kernels::one_step_design_error(taps, omegas, Exec::parallel));
}
