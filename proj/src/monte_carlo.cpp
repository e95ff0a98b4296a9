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

#include "infoshare/monte_carlo.hpp"

#include <cmath>
#include <vector>

#include "infoshare/errors.hpp"
#include "infoshare/payoff.hpp"

namespace infoshare {

Eigen::Vector3d indicators(Action a) {
  switch (a) {
    case Action::kRelease: return Eigen::Vector3d::UnitX();
    case Action::kWithhold: return Eigen::Vector3d::UnitY();
    case Action::kLie: return Eigen::Vector3d::UnitZ();
  }
  return Eigen::Vector3d::UnitX();
}

Action sample_action(const Strategy& s, std::mt19937_64& rng) {
  // 53 random bits -> uniform in [0, 1); independent of the library's
  // distribution implementation.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  if (u < s.x()) return Action::kRelease;
  if (u < s.x() + s.y()) return Action::kWithhold;
  return s.z() > 0.0 ? Action::kLie
                     : (s.y() > 0.0 ? Action::kWithhold : Action::kRelease);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MonteCarloEstimate monte_carlo_payoff(const GameSpec& game,
                                      const Trajectory& traj,
                                      std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("monte carlo needs at least one trial");
  if (!(game.rho > 0.0 && game.rho <= 1.0)) {
    throw ValidationError("rho must lie in (0, 1]");
  }
  const std::size_t n = game.graph.node_count();
  const std::size_t horizon = traj.horizon();
  if (traj.players() != n) throw DomainError("trajectory does not match game");

  // Multipliers depend only on the replayed strategies, not on the samples.
  std::vector<std::vector<Multipliers>> multipliers(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    const auto& profile = traj.steps[t].profile;
    const Eigen::MatrixX3d avg = neighbor_averages(game.graph, profile.matrix());
    multipliers[t].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      multipliers[t].push_back(threshold_multipliers(
          profile[j], avg.row(static_cast<Eigen::Index>(j)).transpose()));
    }
  }

  const bool q_based = game.tau.mode == TauMode::kQBased;
  Eigen::MatrixXd realized(static_cast<Eigen::Index>(trials),
                           static_cast<Eigen::Index>(n));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    Eigen::VectorXd q = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd total = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    double discount = 1.0;
    for (std::size_t t = 0; t < horizon; ++t) {
      const auto& step = traj.steps[t];
      for (std::size_t j = 0; j < n; ++j) {
        const auto row = static_cast<Eigen::Index>(j);
        const double tau = q_based ? tau_at(game.tau, t, horizon, q[row])
                                   : step.tau[row];
        const Eigen::Vector3d amounts =
            indicators(sample_action(step.profile[j], rng));
        q[row] += amounts.x() + amounts.z();
        total[row] += discount *
                      stage_payoff(multipliers[t][j], amounts, game.params[j], tau)
                          .total;
      }
      discount *= game.rho;
    }
    realized.row(static_cast<Eigen::Index>(trial)) = total.transpose();
  }

  MonteCarloEstimate est;
  est.trials = trials;
  // Shifted by the first trial so identical realizations average exactly.
  const Eigen::RowVectorXd shift = realized.row(0);
  est.mean = (shift + (realized.rowwise() - shift).colwise().mean()).transpose();
  est.std_error = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  if (trials > 1) {
    const Eigen::MatrixXd centered = realized.rowwise() - est.mean.transpose();
    const Eigen::VectorXd var =
        centered.cwiseAbs2().colwise().sum().transpose() /
        static_cast<double>(trials - 1);
    est.std_error = (var / static_cast<double>(trials)).cwiseSqrt();
  }
  est.analytic.resize(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    est.analytic[static_cast<Eigen::Index>(j)] =
        horizon_payoff(traj.payoff_totals(j), game.rho);
  }
  return est;
}

MonteCarloEstimate monte_carlo_payoff(const ScenarioConfig& config,
                                      std::size_t info_type,
                                      std::size_t trials, std::uint64_t seed) {
  validate(config);
  const GameSpec game = game_for(config, info_type);
  return monte_carlo_payoff(game, run(game), trials, seed);
}

}  // namespace infoshare
