#include <cmath>
#include <random>

#include "doctest.h"
#include "pathnoise/errors.hpp"
#include "pathnoise/two_sided.hpp"
#include "support.hpp"

using namespace pathnoise;

namespace {

// Finite support with a dominant x(0), so |X| >= |x(0)| - sum of the rest > 0.
TwoSidedSequence dominant_sequence(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = len(rng);
  const int lead = std::uniform_int_distribution<int>(0, n - 1)(rng);
  ComplexVector v(static_cast<std::size_t>(n));
  double tail = 0;
  for (int i = 0; i < n; ++i) {
    if (i == lead) continue;
    v[static_cast<std::size_t>(i)] = {u(rng), u(rng)};
    tail += std::abs(v[static_cast<std::size_t>(i)]);
  }
  v[static_cast<std::size_t>(lead)] = tail + 0.1 + std::abs(u(rng));
  return TwoSidedSequence(-lead, std::move(v));
}

}  // namespace

TEST_CASE("sigma of elementary sequences") {
  const auto s1 = sigma_of(TwoSidedSequence::impulse(0));
  CHECK(s1.sigma == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s1.normalized_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s1.grid_size == kDefaultGridSize);

  const auto s2 = sigma_of(TwoSidedSequence(0, {1.0, -1.0}));
  CHECK(s2.sigma < 1e-15);
  CHECK(s2.omega0 == doctest::Approx(0.0).epsilon(1e-15));

  // |1 + 0.5 e^{-i w}| is smallest at w = pi, which is on the grid.
  const auto s3 = sigma_of(TwoSidedSequence(0, {1.0, 0.5}));
  CHECK(s3.sigma == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s3.omega0 == kPi);
  CHECK(s3.normalized_ratio < 1.0);

  const auto zero = sigma_of(TwoSidedSequence(0, {0.0}));
  CHECK(zero.sigma == 0.0);
  CHECK(zero.normalized_ratio == 0.0);
}

TEST_CASE("sigma ties go to the smallest frequency") {
  const auto s = sigma_of(TwoSidedSequence::impulse(0, Complex(0, 2)));
  CHECK(s.sigma == doctest::Approx(2.0));
  CHECK(s.omega0 == SpectrumGrid::frequency(0, kDefaultGridSize));
}

TEST_CASE("noise split: additivity and constant modulus") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoSidedSequence x = dominant_sequence(rng);
    const SpectrumGrid X = ztransform(x, 1024);
    const auto g = gamma_decompose(X, 0.0);
    REQUIRE(g.sigma > 0.0);
    CHECK_FALSE(g.degenerate);
    const auto nx = norms(X), ny = norms(g.predictable), nn = norms(g.noise);
    CHECK(std::abs(nx.l1 - ny.l1 - nn.l1) <= 1e-9 * nx.l1);
    CHECK(std::abs(nx.linf - ny.linf - nn.linf) <= 1e-9);
    for (std::size_t n = 0; n < X.size(); ++n) {
      CHECK(std::abs(std::abs(g.noise[n]) - g.sigma) <= 1e-12);
      CHECK(std::abs(g.noise[n] + g.predictable[n] - X[n]) <= 1e-12);
    }
  }
}

TEST_CASE("noise split with an arc keeps X inside the arc") {
  std::mt19937_64 rng(22);
  const TwoSidedSequence x = dominant_sequence(rng);
  const SpectrumGrid X = ztransform(x, 2048);
  for (double eps : {0.05, 0.1}) {
    const auto g = gamma_decompose(X, eps);
    REQUIRE(g.arc);
    CHECK(g.arc->half_width() == doctest::Approx(2 * std::asin(eps / 2)));
    std::size_t inside = 0;
    for (std::size_t n = 0; n < X.size(); ++n) {
      const double w = X.frequency(n);
      if (std::abs(std::polar(1.0, w) - std::polar(1.0, g.omega0)) <= eps) {
        ++inside;
        CHECK(g.noise[n] == X[n]);
        CHECK(g.predictable[n] == Complex(0));
      } else {
        CHECK(std::abs(std::abs(g.noise[n]) - g.sigma) <= 1e-12);
      }
    }
    CHECK(inside >= 1);
  }
}

TEST_CASE("noise split with sigma = 0") {
  const TwoSidedSequence x(0, {1.0, -1.0});
  const auto g = gamma_decompose(x, 0.0, 256);
  CHECK(g.degenerate);
  for (std::size_t n = 0; n < 256; ++n) CHECK(g.noise[n] == Complex(0));

  const auto ge = gamma_decompose(x, 0.1, 256);
  CHECK_FALSE(ge.degenerate);
  const auto nn = ge.noise_sequence(-4, 4);
  CHECK(norms(nn).l2 > 0.0);
  CHECK(norms(nn).l2 < norms(x).l2);

  CHECK_THROWS_AS(gamma_decompose(x, -0.1, 256), ValidationError);
}

TEST_CASE("noise and predictable sequences sum to x") {
  std::mt19937_64 rng(23);
  const TwoSidedSequence x = dominant_sequence(rng);
  const auto g = gamma_decompose(x, 0.05, 512);
  const auto n = g.noise_sequence(-40, 40);
  const auto y = g.predictable_sequence(-40, 40);
  for (std::int64_t t = -40; t <= 40; ++t) CHECK(std::abs(n.at(t) + y.at(t) - x.at(t)) < 1e-12);
}

TEST_CASE("recovery of a missing sample") {
  // {x(0)=1, x(1)=0.5} with x(0) hidden: estimate 0.5, worst case 0.5.
  const auto r = recover_missing(TwoSidedSequence(1, {0.5}), 0);
  CHECK(std::abs(r.estimate - Complex(0.5)) < 1e-15);
  CHECK(r.worst_case_error == doctest::Approx(0.5));
  CHECK(r.omega0 == kPi);
  CHECK_FALSE(r.class_supplied);

  // A stored value at m is ignored.
  const auto r2 = recover_missing(TwoSidedSequence(0, {123.0, 0.5}), 0);
  CHECK(std::abs(r2.estimate - Complex(0.5)) < 1e-15);
}

TEST_CASE("recovery is exact when the spectrum vanishes at omega0") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int trial = 0; trial < 10; ++trial) {
    const double w0 = u(rng);
    const auto v = oracle::random_vector(rng, 8);
    // (v * {1, -e^{i w0}}) has a zero at w0.
    ComplexVector x(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      x[i] += v[i];
      x[i + 1] -= std::polar(1.0, w0) * v[i];
    }
    const TwoSidedSequence seq(-4, x);
    for (std::int64_t m : {-4, 0, 4}) {
      const auto r = recover_missing(seq, m, 4096, RecoveryClass{w0, 0.0});
      CHECK(std::abs(r.estimate - seq.at(m)) < 1e-12);
      CHECK(r.class_supplied);
    }
  }
}

TEST_CASE("recovery error matches sigma on the adversarial pair") {
  const double b = 1.3, sigma = 0.4;
  const RecoveryClass cls{kPi, sigma};
  for (double sign : {1.0, -1.0}) {
    const TwoSidedSequence x(0, {b + sign * sigma, b});
    CHECK(sigma_of(x).sigma == doctest::Approx(sigma).epsilon(1e-12));
    const auto r = recover_missing(x, 0, 4096, cls);
    CHECK(std::abs(r.estimate - x.at(0)) == doctest::Approx(sigma).epsilon(1e-12));
  }
  CHECK_THROWS_AS(recover_missing(TwoSidedSequence(0, {1.0}), 0, 64, RecoveryClass{0, -1}),
                  ValidationError);
}
