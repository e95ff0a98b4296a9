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

#include "infoshare/scenario.hpp"

#include <set>
#include <string>

#include "infoshare/errors.hpp"

namespace infoshare {

namespace {

void validate_players(const std::vector<PlayerParams>& players,
                      std::size_t node_count, const std::string& field) {
  if (players.size() != node_count) {
    throw ValidationError(field + " must have one entry per node (" +
                          std::to_string(node_count) + "), got " +
                          std::to_string(players.size()));
  }
  for (std::size_t j = 0; j < players.size(); ++j) {
    try {
      validate(players[j]);
    } catch (const ValidationError& e) {
      throw ValidationError(field + "[" + std::to_string(j) + "]: " + e.what());
    }
  }
}

}  // namespace

void validate(const ScenarioConfig& config) {
  const std::size_t n = config.graph.node_count();
  if (auto isolated = config.graph.isolated_nodes(); !isolated.empty()) {
    throw ValidationError("graph: node " + std::to_string(isolated.front()) +
                          " has no neighbors");
  }
  validate_players(config.players, n, "players");
  if (config.info_types.empty()) {
    throw ValidationError("info_types must list at least one type");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < config.info_types.size(); ++i) {
    const InfoType& type = config.info_types[i];
    const std::string field = "info_types[" + std::to_string(i) + "]";
    if (type.name.empty()) throw ValidationError(field + ".name must be nonempty");
    if (!names.insert(type.name).second) {
      throw ValidationError(field + ".name '" + type.name + "' is duplicated");
    }
    if (type.initial.size() != n) {
      throw ValidationError(field + ".initial must have one strategy per node");
    }
    if (type.players) validate_players(*type.players, n, field + ".players");
  }
  validate(config.tau);
  if (!(config.rho > 0.0 && config.rho <= 1.0)) {
    throw ValidationError("rho must lie in (0, 1]");
  }
  if (config.horizon == 0) throw ValidationError("horizon must be positive");
  if (config.mc && config.mc->trials == 0) {
    throw ValidationError("mc.trials must be positive");
  }
}

GameSpec game_for(const ScenarioConfig& config, std::size_t info_type) {
  const InfoType& type = config.info_types.at(info_type);
  return GameSpec{config.graph,
                  type.players ? *type.players : config.players,
                  type.initial,
                  config.tau,
                  config.horizon,
                  config.rho,
                  config.tie_break,
                  type.name};
}

}  // namespace infoshare
