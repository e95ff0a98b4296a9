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

#ifndef INFOSHARE_SCENARIO_IO_HPP_
#define INFOSHARE_SCENARIO_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "infoshare/dynamics.hpp"
#include "infoshare/monte_carlo.hpp"
#include "infoshare/scenario.hpp"

namespace infoshare {

// Built-in three-player clique games: "game1", "game2", "game3".
std::vector<std::string> preset_names();
bool is_preset(std::string_view name);
// Throws ValidationError for an unknown name.
ScenarioConfig preset(std::string_view name);

// Scenario <-> JSON. Missing optional fields take their defaults; errors
// throw ParseError (shape) or ValidationError (invariants) naming the field.
nlohmann::json to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const nlohmann::json& doc);

// A preset name or the path of a JSON scenario file.
ScenarioConfig load_scenario(const std::string& preset_or_path);
void save_scenario(const ScenarioConfig& config, const std::string& path);

// CSV header of trajectory files.
inline constexpr std::string_view kTrajectoryHeader =
    "t,info_type,player,x,y,z,stage_payoff,tau,q,nash_gap";

// One row per (t, info_type, player), sorted in that order, reals with 12
// significant digits.
void write_trajectory(std::span<const Trajectory> trajectories,
                      std::ostream& out);
// Throws std::runtime_error if `path` cannot be written.
void write_trajectory(std::span<const Trajectory> trajectories,
                      const std::string& path);

// Per-type outcome of a run, as reported by the CLI.
struct RunSummary {
  std::string info_type;
  StrategyProfile final_profile;
  double final_tau = 0.0;  // population mean
  Eigen::VectorXd final_nash_gap;
  std::optional<std::size_t> stationary_at;
  Eigen::VectorXd horizon_payoff;
  double max_mean_lie = 0.0;
  std::optional<MonteCarloEstimate> monte_carlo;
  std::optional<double> grid_disagreement;
};

inline constexpr std::size_t kStationarityWindow = 10;
inline constexpr double kStationarityTolerance = 1e-3;

RunSummary summarize(const GameSpec& game, const Trajectory& traj);

// Largest |enumeration value - grid value| over every (t, player) of the
// trajectory, with the grid at resolution n.
double grid_disagreement(const GameSpec& game, const Trajectory& traj, int n);

nlohmann::json to_json(const RunSummary& summary);
void print_summary(const RunSummary& summary, std::ostream& out);

}  // namespace infoshare

#endif  // INFOSHARE_SCENARIO_IO_HPP_
