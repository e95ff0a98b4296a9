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

#ifndef INFOSHARE_DYNAMICS_HPP_
#define INFOSHARE_DYNAMICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "infoshare/best_response.hpp"
#include "infoshare/payoff.hpp"
#include "infoshare/scenario.hpp"
#include "infoshare/social_graph.hpp"
#include "infoshare/strategy.hpp"

namespace infoshare {

// State of one information type at stage t. `profile` is the strategy
// played at t; tau, q and nash_gap are per player. q is cumulative
// disclosure including stage t.
struct TrajectoryStep {
  StrategyProfile profile;
  std::vector<StagePayoff> payoffs;
  Eigen::VectorXd tau;
  Eigen::VectorXd q;
  Eigen::VectorXd nash_gap;
};

struct Trajectory {
  std::string info_type;
  std::vector<TrajectoryStep> steps;

  std::size_t horizon() const { return steps.size(); }
  std::size_t players() const {
    return steps.empty() ? 0 : steps.front().profile.size();
  }
  // Population mean of the lie proportion at every step.
  Eigen::VectorXd mean_lie() const;
  // Stage payoff totals of player j over time.
  std::vector<double> payoff_totals(std::size_t j) const;
};

// One Jacobi update: every player moves a fraction epsilon toward its best
// response against the same previous profile, then renormalizes.
StrategyProfile evolve_step(const StrategyProfile& profile,
                            const SocialGraph& graph,
                            std::span<const PlayerParams> params,
                            const Eigen::VectorXd& tau,
                            TieBreak tie = TieBreak::kReleaseFirst);
StrategyProfile evolve_step(const StrategyProfile& profile,
                            const SocialGraph& graph,
                            std::span<const PlayerParams> params, double tau,
                            TieBreak tie = TieBreak::kReleaseFirst);

// Convex step old + epsilon * (target - old), renormalized.
Strategy learn_toward(const Strategy& old, const Strategy& target,
                      double epsilon);

// Best-response value minus current stage payoff, per player.
Eigen::VectorXd nash_gap(const StrategyProfile& profile,
                         const SocialGraph& graph,
                         std::span<const PlayerParams> params,
                         const Eigen::VectorXd& tau,
                         TieBreak tie = TieBreak::kReleaseFirst);
Eigen::VectorXd nash_gap(const StrategyProfile& profile,
                         const SocialGraph& graph,
                         std::span<const PlayerParams> params, double tau,
                         TieBreak tie = TieBreak::kReleaseFirst);

// Runs the learning dynamics for game.horizon stages. Deterministic.
Trajectory run(const GameSpec& game);
// One trajectory per information type, in config order.
std::vector<Trajectory> run(const ScenarioConfig& config);

// Earliest t at which no player's strategy strays more than `tol`
// (sup-norm) from its value at t during steps t..t+window.
std::optional<std::size_t> stationarity(const Trajectory& traj,
                                        std::size_t window, double tol);

}  // namespace infoshare

#endif  // INFOSHARE_DYNAMICS_HPP_
