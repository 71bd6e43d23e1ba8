#include "pathnoise/multistep.hpp"

#include <algorithm>

#include "pathnoise/errors.hpp"
#include "pathnoise/spectral.hpp"

namespace pathnoise {

namespace {

OneSidedSequence combine(const OneSidedSequence& a, const OneSidedSequence& b, double sign) {
  ComplexVector out(a.horizon());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.values()[j] + sign * b.values()[j];
  return OneSidedSequence(std::move(out));
}

OneSidedSequence operator-(const OneSidedSequence& a, const OneSidedSequence& b) {
  return combine(a, b, -1.0);
}

OneSidedSequence operator+(const OneSidedSequence& a, const OneSidedSequence& b) {
  return combine(a, b, 1.0);
}

}  // namespace

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::predictable_y: return "PREDICTABLE_Y";
    case StopReason::predictable_x: return "PREDICTABLE_X";
    case StopReason::nonreducible_x: return "NONREDUCIBLE_X";
    case StopReason::nonreducible_y: return "NONREDUCIBLE_Y";
    case StopReason::max_steps: return "MAX_STEPS";
  }
  return "UNKNOWN";
}

void MultistepConfig::validate() const {
  if (bands.empty()) throw ValidationError("multistep: band schedule is empty");
  if (max_steps < 1) throw ValidationError("multistep: max_steps must be >= 1");
  if (!(stop_tol > 0.0)) throw ValidationError("multistep: stop_tol must be > 0");
  if (!(decrease_tol > 0.0)) throw ValidationError("multistep: decrease_tol must be > 0");
  if (K < 1 || T < 1) throw ValidationError("multistep: K and T must be >= 1");
}

MultistepEngine::MultistepEngine(MultistepConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  auto add = [&](const Band& b) {
    const bool known = std::any_of(projectors_.begin(), projectors_.end(),
                                   [&](const auto& entry) { return entry.first == b; });
    if (!known) projectors_.emplace_back(b, LblProjector::build(b, cfg_.K, cfg_.T, cfg_.lambda));
  };
  for (const Band& b : cfg_.bands) {
    add(b);
    add(b.complement());
  }
}

const LblProjector& MultistepEngine::projector_for(const Band& band) const {
  for (const auto& [b, p] : projectors_) {
    if (b == band) return p;
  }
  throw ValidationError("multistep: band not in schedule");
}

MultistepResult MultistepEngine::decompose(const OneSidedSequence& input) const {
  if (input.horizon() > cfg_.T) {
    throw ValidationError("multistep: input horizon exceeds T = " + std::to_string(cfg_.T));
  }
  const OneSidedSequence x = input.padded(cfg_.T);
  const double norm = norms(x).l2;
  MultistepResult r{{}, {}, StopReason::max_steps, OneSidedSequence::zeros(cfg_.T),
                    OneSidedSequence::zeros(cfg_.T), norm};
  if (norm == 0.0) {
    r.stop_reason = StopReason::predictable_y;
    return r;
  }
  const double zero = cfg_.stop_tol * norm;
  const double flat = cfg_.decrease_tol * norm;

  OneSidedSequence xk = x;
  for (std::size_t k = 0; k < cfg_.max_steps; ++k) {
    const Band& band = cfg_.bands[k % cfg_.bands.size()];
    OneSidedSequence x_hat = projector_for(band).project(xk).x_hat;
    OneSidedSequence yk = xk - x_hat;
    StepRecord step{k, band, norms(xk).l2, norms(yk).l2, 0.0, 0.0, 0.0};
    step.delta = step.norm_x - step.norm_y;

    if (step.norm_y <= zero) {
      step.norm_x_next = step.norm_y;
      r.steps.push_back(step);
      r.predictable_part = r.predictable_part + x_hat;
      r.components.push_back({std::move(x_hat), std::nullopt});
      r.noise_part = std::move(yk);
      r.stop_reason = StopReason::predictable_y;
      return r;
    }

    OneSidedSequence y_hat = projector_for(band.complement()).project(yk).x_hat;
    OneSidedSequence x_next = yk - y_hat;
    step.norm_x_next = norms(x_next).l2;
    step.delta_bar = step.norm_y - step.norm_x_next;
    r.steps.push_back(step);

    std::optional<StopReason> stop;
    if (step.norm_x_next <= zero) {
      stop = StopReason::predictable_x;
    } else if (step.delta <= flat) {
      stop = StopReason::nonreducible_x;
    } else if (step.delta_bar <= flat) {
      stop = StopReason::nonreducible_y;
    }

    if (stop == StopReason::nonreducible_x) {
      // x = x_p^{(k)} + y_k: y_hat_k is not part of the decomposition.
      r.predictable_part = r.predictable_part + x_hat;
      r.components.push_back({std::move(x_hat), std::nullopt});
      r.noise_part = std::move(yk);
      r.stop_reason = *stop;
      return r;
    }
    r.predictable_part = r.predictable_part + x_hat + y_hat;
    r.components.push_back({std::move(x_hat), std::move(y_hat)});
    if (stop) {
      r.noise_part = std::move(x_next);
      r.stop_reason = *stop;
      return r;
    }
    xk = std::move(x_next);
  }
  r.noise_part = std::move(xk);
  r.stop_reason = StopReason::max_steps;
  return r;
}

MultistepResult decompose(const OneSidedSequence& x, const MultistepConfig& cfg) {
  return MultistepEngine(cfg).decompose(x);
}

double quantify_randomness(const MultistepResult& r) {
  if (r.stop_reason == StopReason::max_steps && !r.steps.empty()) {
    const StepRecord& last = r.steps.back();
    return std::max(last.norm_x, last.norm_y);
  }
  return norms(r.noise_part).l2;
}

}  // namespace pathnoise
