// Copyright 2026 The Infoshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infoshare/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infoshare/errors.hpp"

namespace infoshare {

namespace {

void require_nonnegative(double v, const char* field) {
  if (!std::isfinite(v) || v < 0.0) {
    throw ValidationError(std::string(field) + " must be finite and nonnegative");
  }
}

}  // namespace

void validate(const PlayerParams& params) {
  static constexpr const char* kWeightNames[] = {"w1", "w2", "w3", "w4", "w5"};
  for (std::size_t i = 0; i < params.w.size(); ++i) {
    require_nonnegative(params.w[i], kWeightNames[i]);
  }
  require_nonnegative(params.zeta, "zeta");
  require_nonnegative(params.theta, "theta");
  require_nonnegative(params.eta, "eta");
  if (!std::isfinite(params.epsilon) || params.epsilon < 0.0 ||
      params.epsilon > 1.0) {
    throw ValidationError("epsilon must lie in [0, 1]");
  }
}

std::string_view to_string(TauMode mode) {
  return mode == TauMode::kLinear ? "linear" : "q-based";
}

TauMode parse_tau_mode(std::string_view name) {
  if (name == "linear") return TauMode::kLinear;
  if (name == "q-based") return TauMode::kQBased;
  throw ValidationError("tau.mode must be 'linear' or 'q-based', got '" +
                        std::string(name) + "'");
}

void validate(const TauSchedule& schedule) {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(schedule.tau_min)) throw ValidationError("tau.tau_min must lie in [0, 1]");
  if (!in_unit(schedule.tau_max)) throw ValidationError("tau.tau_max must lie in [0, 1]");
  if (schedule.tau_min > schedule.tau_max) {
    throw ValidationError("tau.tau_min must not exceed tau.tau_max");
  }
  if (schedule.mode == TauMode::kQBased &&
      !(std::isfinite(schedule.saturation_count) &&
        schedule.saturation_count > 0.0)) {
    throw ValidationError("tau.saturation_count must be positive");
  }
}

double tau_at(const TauSchedule& schedule, std::size_t t, std::size_t horizon,
              double q) {
  const double span = schedule.tau_max - schedule.tau_min;
  double fraction = 0.0;
  if (schedule.mode == TauMode::kLinear) {
    if (horizon > 1) {
      fraction = std::min(1.0, static_cast<double>(t) /
                                   static_cast<double>(horizon - 1));
    }
  } else {
    fraction = std::clamp(q / schedule.saturation_count, 0.0, 1.0);
  }
  return std::clamp(schedule.tau_min + span * fraction, schedule.tau_min,
                    schedule.tau_max);
}

Multipliers threshold_multipliers(const Strategy& s,
                                  const Eigen::Vector3d& neighbor_avg) {
  return {alpha(s.x(), s.z(), neighbor_avg.x(), neighbor_avg.z()),
          beta(s.y(), neighbor_avg.y()), gamma(s.z(), neighbor_avg.z())};
}

double weighted_total(const PayoffLedger& b, const std::array<double, 5>& w) {
  return w[0] * b.social_capital + w[1] * b.privacy_gain -
         w[2] * b.lie_discovery_cost - w[3] * b.moral_cost -
         w[4] * b.admission_cost;
}

StagePayoff stage_payoff(const Multipliers& m, const Eigen::Vector3d& amounts,
                         const PlayerParams& params, double tau) {
  const double release = amounts.x();
  const double withhold = amounts.y();
  const double lie = amounts.z();
  StagePayoff out;
  out.buckets.social_capital = m.social * (release + (1.0 - tau) * lie);
  out.buckets.privacy_gain = m.privacy * withhold + params.eta * lie;
  out.buckets.lie_discovery_cost = m.discovery * tau * lie;
  out.buckets.moral_cost = params.zeta * lie;
  out.buckets.admission_cost = params.theta * release;
  out.total = weighted_total(out.buckets, params.w);
  return out;
}

StagePayoff stage_expected_payoff(const Strategy& s,
                                  const Eigen::Vector3d& neighbor_avg,
                                  const PlayerParams& params, double tau) {
  return stage_payoff(threshold_multipliers(s, neighbor_avg), s.vector(),
                      params, tau);
}

double horizon_payoff(std::span<const double> totals, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw ValidationError("rho must lie in (0, 1]");
  }
  if (totals.empty()) throw ValidationError("horizon payoff needs at least one stage");
  double sum = 0.0;
  double discount = 1.0;
  for (double v : totals) {
    sum += discount * v;
    discount *= rho;
  }
  return sum;
}

}  // namespace infoshare
