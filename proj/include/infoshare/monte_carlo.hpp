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

#ifndef INFOSHARE_MONTE_CARLO_HPP_
#define INFOSHARE_MONTE_CARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "infoshare/dynamics.hpp"
#include "infoshare/scenario.hpp"
#include "infoshare/strategy.hpp"

namespace infoshare {

// Realization of (X, Y, Z): exactly one of the three is 1.
enum class Action { kRelease, kWithhold, kLie };

// (X, Y, Z) indicator vector of an action.
Eigen::Vector3d indicators(Action a);

// Categorical draw with probabilities (x, y, z). Consumes exactly one
// 64-bit output of `rng`.
Action sample_action(const Strategy& s, std::mt19937_64& rng);

// Seed of trial `trial` derived from the master seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct MonteCarloEstimate {
  std::size_t trials = 0;
  Eigen::VectorXd mean;       // per player
  Eigen::VectorXd std_error;  // per player, zero for a single trial
  Eigen::VectorXd analytic;   // discounted expected payoff along the trajectory
};

// Replays the trajectory's strategies, sampling one action per player per
// stage and accumulating the realized discounted payoff. Multipliers come
// from the strategies; only the amounts are sampled. In q-based tau mode the
// detection probability follows each trial's sampled disclosure.
MonteCarloEstimate monte_carlo_payoff(const GameSpec& game,
                                      const Trajectory& traj,
                                      std::size_t trials, std::uint64_t seed);

// Runs info type `info_type` of `config` and estimates its payoff.
MonteCarloEstimate monte_carlo_payoff(const ScenarioConfig& config,
                                      std::size_t info_type,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace infoshare

#endif  // INFOSHARE_MONTE_CARLO_HPP_
