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

#ifndef INFOSHARE_SCENARIO_HPP_
#define INFOSHARE_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infoshare/best_response.hpp"
#include "infoshare/payoff.hpp"
#include "infoshare/social_graph.hpp"
#include "infoshare/strategy.hpp"

namespace infoshare {

inline constexpr std::size_t kDefaultHorizon = 200;

// One class of information (location, age, ...). Types are independent
// games on the same graph; `players`, when set, overrides the scenario-wide
// per-node parameters for this type.
struct InfoType {
  std::string name;
  StrategyProfile initial;
  std::optional<std::vector<PlayerParams>> players;

  friend bool operator==(const InfoType&, const InfoType&) = default;
};

struct MonteCarloSettings {
  std::size_t trials = 10000;
  std::uint64_t seed = 42;

  friend bool operator==(const MonteCarloSettings&,
                         const MonteCarloSettings&) = default;
};

struct ScenarioConfig {
  SocialGraph graph;
  std::vector<PlayerParams> players;  // one per node
  std::vector<InfoType> info_types;
  TauSchedule tau;
  double rho = 1.0;
  std::size_t horizon = kDefaultHorizon;
  TieBreak tie_break = TieBreak::kReleaseFirst;
  std::optional<MonteCarloSettings> mc;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Checks every cross-field invariant: parameter counts match the graph,
// initial profiles cover every node, type names are unique, no node is
// isolated, rho in (0, 1], horizon >= 1. Throws ValidationError naming the
// offending field.
void validate(const ScenarioConfig& config);

// Everything needed to run a single information type.
struct GameSpec {
  SocialGraph graph;
  std::vector<PlayerParams> params;
  StrategyProfile initial;
  TauSchedule tau;
  std::size_t horizon = kDefaultHorizon;
  double rho = 1.0;
  TieBreak tie_break = TieBreak::kReleaseFirst;
  std::string name = "default";
};

GameSpec game_for(const ScenarioConfig& config, std::size_t info_type);

}  // namespace infoshare

#endif  // INFOSHARE_SCENARIO_HPP_
