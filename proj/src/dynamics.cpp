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

#include "infoshare/dynamics.hpp"

#include <string>

#include "infoshare/errors.hpp"

namespace infoshare {

namespace {

void check_sizes(const StrategyProfile& profile, const SocialGraph& graph,
                 std::span<const PlayerParams> params,
                 const Eigen::VectorXd& tau) {
  const std::size_t n = graph.node_count();
  if (profile.size() != n || params.size() != n ||
      static_cast<std::size_t>(tau.size()) != n) {
    throw DomainError("profile, parameters and tau must cover every node");
  }
}

Eigen::VectorXd broadcast(double tau, std::size_t n) {
  return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), tau);
}

// Per-player best responses and current payoffs against `profile`.
struct StageEvaluation {
  std::vector<BestResponse> responses;
  std::vector<StagePayoff> payoffs;
};

StageEvaluation evaluate_stage(const StrategyProfile& profile,
                               const SocialGraph& graph,
                               std::span<const PlayerParams> params,
                               const Eigen::VectorXd& tau, TieBreak tie) {
  const Eigen::MatrixX3d avg = neighbor_averages(graph, profile.matrix());
  StageEvaluation out;
  out.responses.reserve(profile.size());
  out.payoffs.reserve(profile.size());
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const auto row = static_cast<Eigen::Index>(j);
    const Eigen::Vector3d a = avg.row(row).transpose();
    out.responses.push_back(best_response(a, params[j], tau[row], tie));
    out.payoffs.push_back(
        stage_expected_payoff(profile[j], a, params[j], tau[row]));
  }
  return out;
}

StrategyProfile apply_updates(const StrategyProfile& profile,
                              std::span<const PlayerParams> params,
                              const std::vector<BestResponse>& responses) {
  std::vector<Strategy> next;
  next.reserve(profile.size());
  for (std::size_t j = 0; j < profile.size(); ++j) {
    next.push_back(
        learn_toward(profile[j], responses[j].strategy, params[j].epsilon));
  }
  return StrategyProfile(next);
}

}  // namespace

Eigen::VectorXd Trajectory::mean_lie() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(steps.size()));
  for (std::size_t t = 0; t < steps.size(); ++t) {
    out[static_cast<Eigen::Index>(t)] = steps[t].profile.mean().z();
  }
  return out;
}

std::vector<double> Trajectory::payoff_totals(std::size_t j) const {
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& step : steps) out.push_back(step.payoffs.at(j).total);
  return out;
}

Strategy learn_toward(const Strategy& old, const Strategy& target,
                      double epsilon) {
  return renormalize(old.vector() + epsilon * (target.vector() - old.vector()));
}

StrategyProfile evolve_step(const StrategyProfile& profile,
                            const SocialGraph& graph,
                            std::span<const PlayerParams> params,
                            const Eigen::VectorXd& tau, TieBreak tie) {
  check_sizes(profile, graph, params, tau);
  const auto stage = evaluate_stage(profile, graph, params, tau, tie);
  return apply_updates(profile, params, stage.responses);
}

StrategyProfile evolve_step(const StrategyProfile& profile,
                            const SocialGraph& graph,
                            std::span<const PlayerParams> params, double tau,
                            TieBreak tie) {
  return evolve_step(profile, graph, params, broadcast(tau, graph.node_count()),
                     tie);
}

Eigen::VectorXd nash_gap(const StrategyProfile& profile,
                         const SocialGraph& graph,
                         std::span<const PlayerParams> params,
                         const Eigen::VectorXd& tau, TieBreak tie) {
  check_sizes(profile, graph, params, tau);
  const auto stage = evaluate_stage(profile, graph, params, tau, tie);
  Eigen::VectorXd gap(static_cast<Eigen::Index>(profile.size()));
  for (std::size_t j = 0; j < profile.size(); ++j) {
    gap[static_cast<Eigen::Index>(j)] =
        stage.responses[j].value - stage.payoffs[j].total;
  }
  return gap;
}

Eigen::VectorXd nash_gap(const StrategyProfile& profile,
                         const SocialGraph& graph,
                         std::span<const PlayerParams> params, double tau,
                         TieBreak tie) {
  return nash_gap(profile, graph, params, broadcast(tau, graph.node_count()),
                  tie);
}

Trajectory run(const GameSpec& game) {
  const std::size_t n = game.graph.node_count();
  if (game.params.size() != n || game.initial.size() != n) {
    throw ValidationError("game '" + game.name +
                          "': parameters and initial profile must cover every node");
  }
  for (const auto& p : game.params) validate(p);
  validate(game.tau);
  if (game.horizon == 0) throw ValidationError("horizon must be positive");

  Trajectory traj;
  traj.info_type = game.name;
  traj.steps.reserve(game.horizon);

  StrategyProfile profile = game.initial;
  Eigen::VectorXd q = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < game.horizon; ++t) {
    Eigen::VectorXd tau(static_cast<Eigen::Index>(n));
    for (Eigen::Index j = 0; j < tau.size(); ++j) {
      tau[j] = tau_at(game.tau, t, game.horizon, q[j]);
    }
    auto stage = evaluate_stage(profile, game.graph, game.params, tau,
                                game.tie_break);

    TrajectoryStep step;
    step.profile = profile;
    step.tau = tau;
    step.nash_gap.resize(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto row = static_cast<Eigen::Index>(j);
      q[row] += profile[j].disclosed();
      step.nash_gap[row] = stage.responses[j].value - stage.payoffs[j].total;
    }
    step.q = q;
    step.payoffs = std::move(stage.payoffs);
    traj.steps.push_back(std::move(step));

    profile = apply_updates(profile, game.params, stage.responses);
  }
  return traj;
}

std::vector<Trajectory> run(const ScenarioConfig& config) {
  validate(config);
  std::vector<Trajectory> out;
  out.reserve(config.info_types.size());
  for (std::size_t i = 0; i < config.info_types.size(); ++i) {
    out.push_back(run(game_for(config, i)));
  }
  return out;
}

std::optional<std::size_t> stationarity(const Trajectory& traj,
                                        std::size_t window, double tol) {
  if (window == 0) throw DomainError("stationarity window must be at least 1");
  const std::size_t len = traj.steps.size();
  for (std::size_t t = 0; t + window < len; ++t) {
    const Eigen::MatrixX3d& base = traj.steps[t].profile.matrix();
    bool still = true;
    for (std::size_t k = t + 1; k <= t + window && still; ++k) {
      still = (traj.steps[k].profile.matrix() - base).cwiseAbs().maxCoeff() < tol;
    }
    if (still) return t;
  }
  return std::nullopt;
}

}  // namespace infoshare
