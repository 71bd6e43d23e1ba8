#include <cmath>
#include <random>

#include "doctest.h"
#include "pathnoise/errors.hpp"
#include "pathnoise/multistep.hpp"
#include "pathnoise/spectral.hpp"
#include "support.hpp"

using namespace pathnoise;

namespace {

MultistepConfig small_config(std::vector<Band> bands) {
  MultistepConfig cfg;
  cfg.bands = std::move(bands);
  cfg.K = 16;
  cfg.T = 512;
  return cfg;
}

void check_ledger(const OneSidedSequence& x, const MultistepResult& r) {
  const double nx = r.norm_x;
  CHECK(nx == doctest::Approx(l2_norm(x.padded(512).values())));
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    CHECK(s.k == i);
    CHECK(s.delta >= -1e-9 * nx);
    CHECK(s.delta_bar >= -1e-9 * nx);
    CHECK(std::abs(s.norm_x - s.norm_x_next - s.delta - s.delta_bar) <= 1e-9 * nx);
    if (i + 1 < r.steps.size()) CHECK(r.steps[i + 1].norm_x == s.norm_x_next);
  }
  const auto xp = x.padded(512);
  for (std::int64_t t = -511; t <= 0; ++t) {
    CHECK(std::abs(xp.at(t) - r.predictable_part.at(t) - r.noise_part.at(t)) <= 1e-10 * nx);
  }
  ComplexVector sum(512);
  for (const auto& c : r.components) {
    for (std::size_t j = 0; j < 512; ++j) {
      sum[j] += c.x_hat.values()[j];
      if (c.y_hat) sum[j] += c.y_hat->values()[j];
    }
  }
  CHECK(oracle::distance(sum, {r.predictable_part.values().begin(),
                               r.predictable_part.values().end()}) <= 1e-12 * nx);
}

}  // namespace

TEST_CASE("zero input stops immediately") {
  const auto r = decompose(OneSidedSequence::zeros(100), small_config({Band(0, 1)}));
  CHECK(r.stop_reason == StopReason::predictable_y);
  CHECK(r.steps.empty());
  CHECK(r.components.empty());
  CHECK(quantify_randomness(r) == 0.0);
}

TEST_CASE("in-band input is predictable at step 0") {
  std::mt19937_64 rng(61);
  const auto y = oracle::random_coefficients(rng, 16, 8);
  const OneSidedSequence x(oracle::synthesize(0.6, kPi / 2, y, -511, 0));
  const auto r = decompose(x, small_config({Band(0.6, kPi / 2)}));
  CHECK(r.stop_reason == StopReason::predictable_y);
  REQUIRE(r.steps.size() == 1);
  CHECK_FALSE(r.components.front().y_hat);
  CHECK(quantify_randomness(r) <= 1e-6 * r.norm_x);
  check_ledger(x, r);
}

TEST_CASE("annihilated witness is non-reducible noise") {
  const auto cfg = small_config({Band(0.0, kPi / 2)});
  const auto w = find_annihilated(build_projector(cfg.bands[0], cfg.K, cfg.T));
  const auto r = decompose(w, cfg);
  CHECK(r.stop_reason == StopReason::nonreducible_x);
  REQUIRE(r.steps.size() == 1);
  CHECK(quantify_randomness(r) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(r.components.front().y_hat);
  check_ledger(w, r);
}

TEST_CASE("random inputs keep the ledger consistent") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> uc(-kPi, kPi), uw(0.2, 2.5);
  for (int trial = 0; trial < 8; ++trial) {
    const OneSidedSequence x(oracle::random_vector(rng, 300 + 20 * trial));
    auto cfg = small_config({Band(uc(rng), uw(rng)), Band(uc(rng), uw(rng))});
    cfg.max_steps = 6;
    cfg.decrease_tol = 1e-12;
    const auto r = decompose(x, cfg);
    CHECK(r.steps.size() <= 6);
    check_ledger(x, r);
    if (r.stop_reason == StopReason::max_steps) {
      const auto& last = r.steps.back();
      CHECK(quantify_randomness(r) == std::max(last.norm_x, last.norm_y));
      CHECK(r.steps.size() == 6);
    }
  }
}

TEST_CASE("stop reason is deterministic") {
  std::mt19937_64 rng(64);
  const OneSidedSequence x(oracle::random_vector(rng, 256));
  const MultistepEngine engine(small_config({Band(1.0, 0.8)}));
  const auto r1 = engine.decompose(x);
  const auto r2 = engine.decompose(x);
  CHECK(r1.stop_reason == r2.stop_reason);
  CHECK(r1.steps.size() == r2.steps.size());
  CHECK(r1.noise_part.values()[100] == r2.noise_part.values()[100]);
}

TEST_CASE("multistep validation and names") {
  CHECK_THROWS_AS(decompose(OneSidedSequence::zeros(4), small_config({})), ValidationError);
  auto cfg = small_config({Band(0, 1)});
  cfg.max_steps = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg.max_steps = 1;
  cfg.stop_tol = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  CHECK_THROWS_AS(decompose(OneSidedSequence::zeros(600), small_config({Band(0, 1)})),
                  ValidationError);
  CHECK(std::string(to_string(StopReason::predictable_y)) == "PREDICTABLE_Y");
  CHECK(std::string(to_string(StopReason::predictable_x)) == "PREDICTABLE_X");
  CHECK(std::string(to_string(StopReason::nonreducible_x)) == "NONREDUCIBLE_X");
  CHECK(std::string(to_string(StopReason::nonreducible_y)) == "NONREDUCIBLE_Y");
  CHECK(std::string(to_string(StopReason::max_steps)) == "MAX_STEPS");
}
