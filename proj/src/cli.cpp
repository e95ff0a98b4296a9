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

#include "infoshare/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "infoshare/dynamics.hpp"
#include "infoshare/errors.hpp"
#include "infoshare/monte_carlo.hpp"
#include "infoshare/scenario_io.hpp"

namespace infoshare {

namespace {

struct SimulateOptions {
  std::string scenario;
  std::string out;
  std::string summary_json;
  std::string dump_scenario;
  std::optional<std::size_t> steps;
  std::optional<double> epsilon;
  std::optional<double> eta;
  std::optional<double> rho;
  std::optional<std::string> tau_mode;
  std::optional<std::size_t> mc_trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_check;
  bool summary = false;
};

void for_each_params(ScenarioConfig& config, auto&& fn) {
  for (auto& p : config.players) fn(p);
  for (auto& type : config.info_types) {
    if (type.players) {
      for (auto& p : *type.players) fn(p);
    }
  }
}

void apply_overrides(const SimulateOptions& opt, ScenarioConfig& config) {
  if (opt.steps) config.horizon = *opt.steps;
  if (opt.epsilon) for_each_params(config, [&](PlayerParams& p) { p.epsilon = *opt.epsilon; });
  if (opt.eta) for_each_params(config, [&](PlayerParams& p) { p.eta = *opt.eta; });
  if (opt.rho) config.rho = *opt.rho;
  if (opt.tau_mode) config.tau.mode = parse_tau_mode(*opt.tau_mode);
  if (opt.mc_trials || opt.seed) {
    MonteCarloSettings mc = config.mc.value_or(MonteCarloSettings{});
    if (opt.mc_trials) mc.trials = *opt.mc_trials;
    if (opt.seed) mc.seed = *opt.seed;
    config.mc = mc;
  }
  validate(config);
}

int simulate(const SimulateOptions& opt, std::ostream& out) {
  ScenarioConfig config = load_scenario(opt.scenario);
  apply_overrides(opt, config);
  if (!opt.dump_scenario.empty()) save_scenario(config, opt.dump_scenario);

  const bool want_mc = config.mc.has_value();
  std::vector<Trajectory> trajectories;
  std::vector<RunSummary> summaries;
  for (std::size_t i = 0; i < config.info_types.size(); ++i) {
    const GameSpec game = game_for(config, i);
    Trajectory traj = run(game);
    RunSummary summary = summarize(game, traj);
    if (want_mc) {
      summary.monte_carlo =
          monte_carlo_payoff(game, traj, config.mc->trials, config.mc->seed);
    }
    if (opt.grid_check) {
      summary.grid_disagreement = grid_disagreement(game, traj, *opt.grid_check);
    }
    trajectories.push_back(std::move(traj));
    summaries.push_back(std::move(summary));
  }

  if (!opt.out.empty()) write_trajectory(trajectories, opt.out);
  if (!opt.summary_json.empty()) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& s : summaries) doc.push_back(to_json(s));
    std::ofstream file(opt.summary_json);
    if (!file) throw std::runtime_error("cannot write '" + opt.summary_json + "'");
    file << doc.dump(2) << '\n';
  }
  const bool print = opt.summary || want_mc || opt.grid_check ||
                     (opt.out.empty() && opt.summary_json.empty());
  if (print) {
    for (const auto& s : summaries) print_summary(s, out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Information release, withholding and deception on social graphs"};
  app.require_subcommand(1);

  SimulateOptions opt;
  auto* sim = app.add_subcommand("simulate", "Run the learning dynamics for a scenario");
  sim->add_option("--scenario", opt.scenario, "Preset name (game1, game2, game3) or JSON path")
      ->required();
  sim->add_option("--out", opt.out, "Trajectory CSV destination");
  sim->add_option("--steps", opt.steps, "Override the horizon T")->check(CLI::PositiveNumber);
  sim->add_option("--epsilon", opt.epsilon, "Override every learning rate");
  sim->add_option("--eta", opt.eta, "Override every privacy gain per lie");
  sim->add_option("--rho", opt.rho, "Override the discount factor");
  sim->add_option("--tau-mode", opt.tau_mode, "linear or q-based");
  sim->add_option("--mc-trials", opt.mc_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", opt.seed, "Monte Carlo seed");
  sim->add_option("--grid-check", opt.grid_check,
                  "Compare best responses with a grid search at this resolution")
      ->check(CLI::Range(2, 100000));
  sim->add_flag("--summary", opt.summary, "Print final profiles, stationarity and gaps");
  sim->add_option("--summary-json", opt.summary_json, "Write the summary as JSON");
  sim->add_option("--dump-scenario", opt.dump_scenario, "Write the resolved scenario JSON");

  auto* presets = app.add_subcommand("presets", "List built-in scenarios");

  std::vector<const char*> argv{"infoshare"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (presets->parsed()) {
      for (const auto& name : preset_names()) out << name << '\n';
      return 0;
    }
    return simulate(opt, out);
  } catch (const std::exception& e) {
    err << "infoshare: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace infoshare
