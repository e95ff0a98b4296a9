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

#include "infoshare/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "infoshare/errors.hpp"

namespace infoshare {

using nlohmann::json;

namespace {

constexpr std::string_view kPresetNames[] = {"game1", "game2", "game3"};

ScenarioConfig clique_game(std::array<double, 5> w, std::string name) {
  PlayerParams params;
  params.w = w;
  ScenarioConfig config{complete_graph(3), std::vector<PlayerParams>(3, params),
                        {}, TauSchedule{}, 1.0, kDefaultHorizon,
                        TieBreak::kReleaseFirst, std::nullopt};
  config.info_types.push_back(
      {std::move(name), StrategyProfile(3, validate(0.7, 0.2, 0.1)), std::nullopt});
  return config;
}

// ---- JSON reading helpers; every error names its field path. ----

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError("missing field '" + path + key + "'");
  }
  return obj.at(key);
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError("field '" + field + "' must be a number");
  return v.get<double>();
}

std::uint64_t as_count(const json& v, const std::string& field) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError("field '" + field + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

double number_or(const json& obj, const char* key, const std::string& path,
                 double fallback) {
  return obj.contains(key) ? as_number(obj.at(key), path + key) : fallback;
}

Eigen::Vector3d as_triple(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 3) {
    throw ParseError("field '" + field + "' must be an [x, y, z] array");
  }
  return {as_number(v[0], field + "[0]"), as_number(v[1], field + "[1]"),
          as_number(v[2], field + "[2]")};
}

PlayerParams params_from_json(const json& v, const std::string& path) {
  if (!v.is_object()) throw ParseError("field '" + path + "' must be an object");
  PlayerParams p;
  const json& w = require(v, "w", path + ".");
  if (!w.is_array() || w.size() != 5) {
    throw ParseError("field '" + path + ".w' must be an array of 5 numbers");
  }
  for (std::size_t i = 0; i < 5; ++i) {
    p.w[i] = as_number(w[i], path + ".w[" + std::to_string(i) + "]");
  }
  p.zeta = number_or(v, "zeta", path + ".", p.zeta);
  p.theta = number_or(v, "theta", path + ".", p.theta);
  p.eta = number_or(v, "eta", path + ".", p.eta);
  p.epsilon = number_or(v, "epsilon", path + ".", p.epsilon);
  try {
    validate(p);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return p;
}

// Either an array with one entry per node or a single object for all nodes.
std::vector<PlayerParams> players_from_json(const json& v, std::size_t n,
                                            const std::string& path) {
  if (v.is_object()) return std::vector<PlayerParams>(n, params_from_json(v, path));
  if (!v.is_array()) {
    throw ParseError("field '" + path + "' must be an object or an array");
  }
  std::vector<PlayerParams> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    out.push_back(params_from_json(v[j], path + "[" + std::to_string(j) + "]"));
  }
  return out;
}

StrategyProfile profile_from_json(const json& v, std::size_t n,
                                  const std::string& path) {
  auto checked = [&](const json& e, const std::string& field) {
    try {
      return validate(as_triple(e, field));
    } catch (const ValidationError& err) {
      throw ValidationError(field + ": " + err.what());
    }
  };
  // A single [x, y, z] applies to every node.
  if (v.is_array() && v.size() == 3 && v[0].is_number()) {
    return StrategyProfile(n, checked(v, path));
  }
  if (!v.is_array()) throw ParseError("field '" + path + "' must be an array");
  std::vector<Strategy> rows;
  for (std::size_t j = 0; j < v.size(); ++j) {
    rows.push_back(checked(v[j], path + "[" + std::to_string(j) + "]"));
  }
  return StrategyProfile(rows);
}

SocialGraph graph_from_json(const json& g) {
  if (!g.is_object()) throw ParseError("field 'graph' must be an object");
  const std::size_t n = as_count(require(g, "nodes", "graph."), "graph.nodes");
  std::vector<Edge> edges;
  const json& e = require(g, "edges", "graph.");
  if (!e.is_array()) throw ParseError("field 'graph.edges' must be an array");
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string field = "graph.edges[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != 2) {
      throw ParseError("field '" + field + "' must be a [u, v] pair");
    }
    edges.emplace_back(as_count(e[i][0], field), as_count(e[i][1], field));
  }
  std::optional<std::vector<double>> popularity;
  if (g.contains("popularity") && !g.at("popularity").is_null()) {
    const json& p = g.at("popularity");
    if (!p.is_object()) {
      throw ParseError("field 'graph.popularity' must map node ids to weights");
    }
    std::vector<double> weights(n, std::nan(""));
    for (const auto& [key, value] : p.items()) {
      std::size_t id = 0;
      try {
        std::size_t used = 0;
        id = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("graph.popularity: '" + key + "' is not a node id");
      }
      if (id >= n) {
        throw ValidationError("graph.popularity: node " + key + " does not exist");
      }
      weights[id] = as_number(value, "graph.popularity." + key);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (std::isnan(weights[k])) {
        throw ValidationError("graph.popularity: no weight for node " +
                              std::to_string(k));
      }
    }
    popularity = std::move(weights);
  }
  return SocialGraph(n, edges, std::move(popularity));
}

json params_to_json(const PlayerParams& p) {
  return {{"w", p.w}, {"zeta", p.zeta}, {"theta", p.theta},
          {"eta", p.eta}, {"epsilon", p.epsilon}};
}

json profile_to_json(const StrategyProfile& profile) {
  json rows = json::array();
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const Strategy s = profile[j];
    rows.push_back({s.x(), s.y(), s.z()});
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<std::string> preset_names() {
  return std::vector<std::string>(std::begin(kPresetNames), std::end(kPresetNames));
}

bool is_preset(std::string_view name) {
  return std::find(std::begin(kPresetNames), std::end(kPresetNames), name) !=
         std::end(kPresetNames);
}

ScenarioConfig preset(std::string_view name) {
  if (name == "game1") return clique_game({1.0, 0.25, 0.5, 1.0, 0.125}, "default");
  if (name == "game2") return clique_game({2.0, 0.25, 0.25, 0.125, 0.125}, "default");
  if (name == "game3") return clique_game({0.5, 5.0, 2.0, 100.0, 3.0}, "default");
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

json to_json(const ScenarioConfig& config) {
  json graph = {{"nodes", config.graph.node_count()}, {"edges", json::array()}};
  for (const auto& [a, b] : config.graph.edges()) graph["edges"].push_back({a, b});
  if (config.graph.has_popularity()) {
    json pop = json::object();
    const auto& weights = *config.graph.popularity();
    for (std::size_t k = 0; k < weights.size(); ++k) {
      pop[std::to_string(k)] = weights[k];
    }
    graph["popularity"] = pop;
  }

  json players = json::array();
  for (const auto& p : config.players) players.push_back(params_to_json(p));

  json types = json::array();
  for (const auto& type : config.info_types) {
    json t = {{"name", type.name}, {"initial", profile_to_json(type.initial)}};
    if (type.players) {
      t["players"] = json::array();
      for (const auto& p : *type.players) t["players"].push_back(params_to_json(p));
    }
    types.push_back(t);
  }

  json doc = {
      {"graph", graph},
      {"players", players},
      {"info_types", types},
      {"tau",
       {{"mode", to_string(config.tau.mode)},
        {"tau_min", config.tau.tau_min},
        {"tau_max", config.tau.tau_max},
        {"saturation_count", config.tau.saturation_count}}},
      {"rho", config.rho},
      {"horizon", config.horizon},
      {"tie_break", to_string(config.tie_break)},
  };
  if (config.mc) doc["mc"] = {{"trials", config.mc->trials}, {"seed", config.mc->seed}};
  return doc;
}

ScenarioConfig scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  SocialGraph graph = graph_from_json(require(doc, "graph", ""));
  const std::size_t n = graph.node_count();

  ScenarioConfig config{graph, players_from_json(require(doc, "players", ""), n, "players"),
                        {}, TauSchedule{}, 1.0, kDefaultHorizon,
                        TieBreak::kReleaseFirst, std::nullopt};

  const json& types = require(doc, "info_types", "");
  if (!types.is_array()) throw ParseError("field 'info_types' must be an array");
  for (std::size_t i = 0; i < types.size(); ++i) {
    const std::string path = "info_types[" + std::to_string(i) + "]";
    const json& t = types[i];
    const json& name = require(t, "name", path + ".");
    if (!name.is_string()) throw ParseError("field '" + path + ".name' must be a string");
    InfoType type{name.get<std::string>(),
                  profile_from_json(require(t, "initial", path + "."), n, path + ".initial"),
                  std::nullopt};
    if (t.contains("players")) {
      type.players = players_from_json(t.at("players"), n, path + ".players");
    }
    config.info_types.push_back(std::move(type));
  }

  if (doc.contains("tau")) {
    const json& tau = doc.at("tau");
    if (!tau.is_object()) throw ParseError("field 'tau' must be an object");
    if (tau.contains("mode")) {
      if (!tau.at("mode").is_string()) throw ParseError("field 'tau.mode' must be a string");
      config.tau.mode = parse_tau_mode(tau.at("mode").get<std::string>());
    }
    config.tau.tau_min = number_or(tau, "tau_min", "tau.", config.tau.tau_min);
    config.tau.tau_max = number_or(tau, "tau_max", "tau.", config.tau.tau_max);
    config.tau.saturation_count =
        number_or(tau, "saturation_count", "tau.", config.tau.saturation_count);
  }
  config.rho = number_or(doc, "rho", "", config.rho);
  if (doc.contains("horizon")) config.horizon = as_count(doc.at("horizon"), "horizon");
  if (doc.contains("tie_break")) {
    if (!doc.at("tie_break").is_string()) throw ParseError("field 'tie_break' must be a string");
    config.tie_break = parse_tie_break(doc.at("tie_break").get<std::string>());
  }
  if (doc.contains("mc") && !doc.at("mc").is_null()) {
    const json& mc = doc.at("mc");
    MonteCarloSettings settings;
    if (mc.contains("trials")) settings.trials = as_count(mc.at("trials"), "mc.trials");
    if (mc.contains("seed")) settings.seed = as_count(mc.at("seed"), "mc.seed");
    config.mc = settings;
  }
  validate(config);
  return config;
}

ScenarioConfig load_scenario(const std::string& preset_or_path) {
  if (is_preset(preset_or_path)) return preset(preset_or_path);
  std::ifstream in(preset_or_path);
  if (!in) throw ParseError("cannot open scenario file '" + preset_or_path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed scenario file '" + preset_or_path + "': " + e.what());
  }
  return scenario_from_json(doc);
}

void save_scenario(const ScenarioConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << to_json(config).dump(2) << '\n';
}

void write_trajectory(std::span<const Trajectory> trajectories,
                      std::ostream& out) {
  std::vector<std::size_t> order(trajectories.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return trajectories[a].info_type < trajectories[b].info_type;
  });
  std::size_t horizon = 0;
  for (const auto& traj : trajectories) horizon = std::max(horizon, traj.horizon());

  out << kTrajectoryHeader << '\n';
  for (std::size_t t = 0; t < horizon; ++t) {
    for (std::size_t idx : order) {
      const Trajectory& traj = trajectories[idx];
      if (t >= traj.horizon()) continue;
      const TrajectoryStep& step = traj.steps[t];
      for (std::size_t j = 0; j < step.profile.size(); ++j) {
        const auto row = static_cast<Eigen::Index>(j);
        const Strategy s = step.profile[j];
        out << t << ',' << traj.info_type << ',' << j << ',' << format_real(s.x())
            << ',' << format_real(s.y()) << ',' << format_real(s.z()) << ','
            << format_real(step.payoffs[j].total) << ',' << format_real(step.tau[row])
            << ',' << format_real(step.q[row]) << ','
            << format_real(step.nash_gap[row]) << '\n';
      }
    }
  }
}

void write_trajectory(std::span<const Trajectory> trajectories,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trajectory to '" + path + "'");
  write_trajectory(trajectories, out);
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

RunSummary summarize(const GameSpec& game, const Trajectory& traj) {
  RunSummary s;
  s.info_type = traj.info_type;
  const TrajectoryStep& last = traj.steps.back();
  s.final_profile = last.profile;
  s.final_tau = last.tau.mean();
  s.final_nash_gap = last.nash_gap;
  s.stationary_at = stationarity(traj, kStationarityWindow, kStationarityTolerance);
  s.horizon_payoff.resize(static_cast<Eigen::Index>(traj.players()));
  for (std::size_t j = 0; j < traj.players(); ++j) {
    s.horizon_payoff[static_cast<Eigen::Index>(j)] =
        horizon_payoff(traj.payoff_totals(j), game.rho);
  }
  s.max_mean_lie = traj.mean_lie().maxCoeff();
  return s;
}

double grid_disagreement(const GameSpec& game, const Trajectory& traj, int n) {
  double worst = 0.0;
  for (const auto& step : traj.steps) {
    const Eigen::MatrixX3d avg = neighbor_averages(game.graph, step.profile.matrix());
    for (std::size_t j = 0; j < step.profile.size(); ++j) {
      const auto row = static_cast<Eigen::Index>(j);
      const Eigen::Vector3d a = avg.row(row).transpose();
      const double exact =
          best_response(a, game.params[j], step.tau[row], game.tie_break).value;
      const double grid =
          grid_oracle(a, game.params[j], step.tau[row], n, game.tie_break).value;
      worst = std::max(worst, std::abs(exact - grid));
    }
  }
  return worst;
}

json to_json(const RunSummary& s) {
  json doc = {
      {"info_type", s.info_type},
      {"final_profile", profile_to_json(s.final_profile)},
      {"final_tau", s.final_tau},
      {"final_nash_gap", vector_to_json(s.final_nash_gap)},
      {"stationary_at", s.stationary_at ? json(*s.stationary_at) : json(nullptr)},
      {"horizon_payoff", vector_to_json(s.horizon_payoff)},
      {"max_mean_lie", s.max_mean_lie},
  };
  if (s.monte_carlo) {
    doc["monte_carlo"] = {{"trials", s.monte_carlo->trials},
                          {"mean", vector_to_json(s.monte_carlo->mean)},
                          {"std_error", vector_to_json(s.monte_carlo->std_error)},
                          {"analytic", vector_to_json(s.monte_carlo->analytic)}};
  }
  if (s.grid_disagreement) doc["grid_disagreement"] = *s.grid_disagreement;
  return doc;
}

void print_summary(const RunSummary& s, std::ostream& out) {
  out << "info type: " << s.info_type << '\n';
  out << "  stationary at: "
      << (s.stationary_at ? std::to_string(*s.stationary_at) : std::string("never"))
      << "\n  final tau: " << format_real(s.final_tau)
      << "\n  peak mean lie: " << format_real(s.max_mean_lie) << '\n';
  for (std::size_t j = 0; j < s.final_profile.size(); ++j) {
    const auto row = static_cast<Eigen::Index>(j);
    const Strategy st = s.final_profile[j];
    out << "  player " << j << ": (" << format_real(st.x()) << ", "
        << format_real(st.y()) << ", " << format_real(st.z())
        << ")  nash_gap " << format_real(s.final_nash_gap[row]) << "  payoff "
        << format_real(s.horizon_payoff[row]);
    if (s.monte_carlo) {
      out << "  mc " << format_real(s.monte_carlo->mean[row]) << " +- "
          << format_real(s.monte_carlo->std_error[row]) << " (analytic "
          << format_real(s.monte_carlo->analytic[row]) << ")";
    }
    out << '\n';
  }
  if (s.grid_disagreement) {
    out << "  grid disagreement: " << format_real(*s.grid_disagreement) << '\n';
  }
}

}  // namespace infoshare
