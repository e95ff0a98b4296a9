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

#ifndef INFOSHARE_PAYOFF_HPP_
#define INFOSHARE_PAYOFF_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "infoshare/strategy.hpp"

namespace infoshare {

// Per-player preferences. w weighs the five payoff buckets in ledger order
// (social capital, privacy gain, lie discovery, moral cost, admission cost).
struct PlayerParams {
  std::array<double, 5> w{1.0, 1.0, 1.0, 1.0, 1.0};
  double zeta = 1.0;     // moral cost per lie
  double theta = 1.0;    // admission cost per truth
  double eta = 1.0;      // privacy gain per lie
  double epsilon = 0.1;  // learning rate

  friend bool operator==(const PlayerParams&, const PlayerParams&) = default;
};

// Throws ValidationError if any field is negative or non-finite, or epsilon
// lies outside [0, 1].
void validate(const PlayerParams& params);

enum class TauMode { kLinear, kQBased };

std::string_view to_string(TauMode mode);
// Accepts "linear" and "q-based"; throws ValidationError otherwise.
TauMode parse_tau_mode(std::string_view name);

// Lie-detection probability over a run. Linear mode ramps with time, q-based
// mode ramps with the player's cumulative disclosure and saturates.
struct TauSchedule {
  TauMode mode = TauMode::kLinear;
  double tau_min = 0.1;
  double tau_max = 0.9;
  double saturation_count = 10.0;

  friend bool operator==(const TauSchedule&, const TauSchedule&) = default;
};

void validate(const TauSchedule& schedule);

// tau at step t of a horizon-T run, given cumulative disclosure q.
double tau_at(const TauSchedule& schedule, std::size_t t, std::size_t horizon,
              double q);

// The piecewise-constant threshold multipliers. Each is 0 or 1.
// Social capital is earned only when disclosing no more than the neighbors.
inline double alpha(double x, double z, double xbar, double zbar) {
  return x + z <= xbar + zbar ? 1.0 : 0.0;
}
// Privacy pays when withholding at least as much as the neighbors.
inline double beta(double y, double ybar) { return y >= ybar ? 1.0 : 0.0; }
// A lie is costly only when lying at least as much as the neighbors.
inline double gamma(double z, double zbar) { return z >= zbar ? 1.0 : 0.0; }

// Multiplier values for one player at one stage.
struct Multipliers {
  double social = 0.0;     // alpha
  double privacy = 0.0;    // beta
  double discovery = 0.0;  // gamma
};

Multipliers threshold_multipliers(const Strategy& s,
                                  const Eigen::Vector3d& neighbor_avg);

// The five accumulation buckets of a stage payoff, before weighting.
struct PayoffLedger {
  double social_capital = 0.0;
  double privacy_gain = 0.0;
  double lie_discovery_cost = 0.0;
  double moral_cost = 0.0;
  double admission_cost = 0.0;

  friend bool operator==(const PayoffLedger&, const PayoffLedger&) = default;
};

struct StagePayoff {
  double total = 0.0;
  PayoffLedger buckets;
};

// w1*social + w2*privacy - w3*discovery - w4*moral - w5*admission.
double weighted_total(const PayoffLedger& buckets,
                      const std::array<double, 5>& w);

// Fills the ledger for given multipliers and action amounts (release,
// withhold, lie). `amounts` is the strategy for the expected payoff or a
// one-hot action for a realized payoff; multipliers always come from the
// strategies.
StagePayoff stage_payoff(const Multipliers& m, const Eigen::Vector3d& amounts,
                         const PlayerParams& params, double tau);

// Single-stage expected payoff with the threshold multipliers.
StagePayoff stage_expected_payoff(const Strategy& s,
                                  const Eigen::Vector3d& neighbor_avg,
                                  const PlayerParams& params, double tau);

// sum_t rho^t * totals[t]. Throws ValidationError unless rho is in (0, 1]
// and `totals` is nonempty.
double horizon_payoff(std::span<const double> totals, double rho);

}  // namespace infoshare

#endif  // INFOSHARE_PAYOFF_HPP_
