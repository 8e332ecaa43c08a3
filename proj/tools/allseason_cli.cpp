// Copyright 2026 The allseason authors.
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "allseason/experiment.hpp"
#include "allseason/grid_search.hpp"
#include "allseason/summary.hpp"

namespace {

int cmd_run(const std::string& config_path,
            const std::optional<std::uint64_t>& seed,
            const std::optional<std::string>& out_dir) {
  allseason::ExperimentConfig config =
      allseason::load_experiment_config(config_path);
  if (out_dir) config.output_dir = *out_dir;
  std::filesystem::create_directories(config.output_dir);

  const allseason::PreparedEnvironment prepared =
      allseason::prepare_environment(config.environment, config.horizon);

  std::vector<std::uint64_t> seeds =
      seed ? std::vector<std::uint64_t>{*seed} : config.seeds;
  for (std::uint64_t s : seeds) {
    const allseason::RewardLog log =
        allseason::run_experiment(config, prepared, s);
    const std::filesystem::path path =
        std::filesystem::path(config.output_dir) /
        allseason::log_filename(log);
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << '\n';
      return 1;
    }
    allseason::write_log_csv(log, out);
    std::cout << log.algorithm << " pattern=" << log.pattern << " seed=" << s
              << " mean_reward=" << log.mean_reward() << " -> " << path.string()
              << '\n';
  }
  return 0;
}

int cmd_grid(const std::string& config_path,
             const std::optional<std::string>& out_dir) {
  const allseason::ExperimentConfig config =
      allseason::load_experiment_config(config_path);
  const allseason::GridSpec grid = allseason::load_grid_spec(config_path);
  const allseason::GridReport report = allseason::grid_search(config, grid);

  allseason::write_grid_report_csv(report, std::cout);
  char discount[32];
  std::snprintf(discount, sizeof(discount), "%.12g", report.best.discount);
  std::cout << "best: algorithm=" << report.best.algorithm
            << " window=" << report.best.window << " discount=" << discount
            << " n_max=" << report.best.n_max << '\n';

  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    const std::filesystem::path path =
        std::filesystem::path(*out_dir) / "grid_report.csv";
    std::ofstream out(path);
    allseason::write_grid_report_csv(report, out);
    std::cout << "report -> " << path.string() << '\n';
  }
  return 0;
}

int cmd_summarize(const std::string& in_dir,
                  const std::optional<std::string>& out_file) {
  const std::vector<allseason::SummaryCell> cells =
      allseason::summarize_directory(in_dir);
  if (cells.empty()) {
    std::cerr << "no run logs found in " << in_dir << '\n';
    return 1;
  }
  std::cout << allseason::format_summary_table(cells);
  const std::string path =
      out_file ? *out_file : (std::filesystem::path(in_dir) / "summary.csv")
                                 .string();
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return 1;
  }
  allseason::write_summary_csv(cells, out);
  std::cout << "summary -> " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seasonal contextual-bandit experiment runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string in_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> out_file;

  CLI::App* run = app.add_subcommand("run", "execute seeded experiment runs");
  run->add_option("--config", config_path, "experiment config JSON")
      ->required();
  run->add_option("--seed", seed, "run a single seed instead of the config's");
  run->add_option("--out", out_dir, "output directory override");

  CLI::App* grid = app.add_subcommand(
      "grid", "hyperparameter grid search on the first 10% of the stream");
  grid->add_option("--config", config_path, "experiment config JSON with grid")
      ->required();
  grid->add_option("--out", out_dir, "directory for grid_report.csv");

  CLI::App* summarize =
      app.add_subcommand("summarize", "aggregate run CSVs into a table");
  summarize->add_option("--in", in_dir, "directory of run CSVs")->required();
  summarize->add_option("--out", out_file, "summary CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, seed, out_dir);
    if (grid->parsed()) return cmd_grid(config_path, out_dir);
    if (summarize->parsed()) return cmd_summarize(in_dir, out_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
