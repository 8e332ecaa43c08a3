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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "allseason/bandit_pool.hpp"
#include "allseason/classification_env.hpp"
#include "allseason/synthetic_env.hpp"

namespace allseason {

/// Algorithm plus hyperparameters. Known algorithms: random, lints,
/// sw-lints, d-lints, all-season-sw, all-season-disc. The names bob and
/// denband are reserved extension slots and fail with a clear message.
struct PolicySpec {
  std::string algorithm = "lints";
  double lambda = 1.0;
  double noise_variance = 1.0;  // the model sigma^2
  std::size_t window = 100;     // tau for sw-lints / all-season-sw
  double discount = 0.999;      // gamma for d-lints / all-season-disc
  int n_max = 4;
  PruneMetric prune_metric = PruneMetric::SymmetricKl;
  PruneVictim prune_victim = PruneVictim::LessCertain;
  bool shadow_enabled = true;
};

struct DatasetSpec {
  std::string kind;  // idx | feature-table | gaussian-clusters
  std::string images;
  std::string labels;
  std::string path;
  int classes = 10;
  int dimension = 20;
  long rows = 6000;
  double separation = 3.0;
  int subspace = 0;  // rank of the cluster-mean subspace; 0 = full
};

struct PcaSpec {
  bool enabled = false;
  int components = -1;
  double variance_fraction = -1.0;
};

struct ScheduleSpec {
  std::string file;     // explicit schedule, or
  std::string pattern;  // regular | realistic | extreme
  int num_params = 0;   // parameter/task count for generated schedules
  long min_segment = 600;
  std::string label;    // pattern name reported in logs; defaults sensibly
};

struct EnvironmentSpec {
  std::string type = "synthetic";  // synthetic | classification
  // synthetic
  int arms = 5;
  int dimension = 5;
  double noise_variance = 0.1;
  // classification
  std::string task = "arm-shift";  // two-arm-digits | arm-shift | two-arm-groups
  DatasetSpec dataset;
  PcaSpec pca;
  std::vector<std::vector<int>> permutations;  // explicit arm-shift tasks
  std::string task_table_file;                 // two-arm-groups table
  bool normalize_contexts = false;             // scale rows to unit norm
  ScheduleSpec schedule;
  std::uint64_t env_seed = 9001;
};

struct ExperimentConfig {
  std::string name = "experiment";
  EnvironmentSpec environment;
  PolicySpec policy;
  long horizon = 10000;
  int batch_size = 10;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::string output_dir = "out";
};

ExperimentConfig load_experiment_config(const std::string& path);
void validate(const ExperimentConfig& config);

/// Per-step rows plus per-batch average rewards for one seeded run.
struct RewardLog {
  struct Row {
    long batch = 0;
    long t = 0;
    std::size_t arm = 0;
    double reward = 0.0;
    int bandit_id = 0;
    int pool_size = 0;
  };

  std::uint64_t seed = 0;
  std::string algorithm;
  std::string pattern;
  std::vector<Row> rows;
  std::vector<double> batch_average;

  double mean_reward() const;
};

/// Environment instantiated once per config and shared across seeds:
/// dataset loading and PCA happen here, not inside every run.
struct PreparedEnvironment {
  std::variant<std::monostate, SyntheticLinearEnv, ClassificationEnv> env;
  std::string pattern;
  int action_dimension = 0;
  long horizon = 0;
};

PreparedEnvironment prepare_environment(const EnvironmentSpec& spec,
                                        long horizon);

/// Executes one seeded run: deterministic in (config, seed), all policy
/// updates at batch boundaries.
RewardLog run_experiment(const ExperimentConfig& config,
                         const PreparedEnvironment& prepared,
                         std::uint64_t seed);
RewardLog run_experiment(const ExperimentConfig& config, std::uint64_t seed);

/// CSV with columns: seed,batch,t,algorithm,arm,reward,bandit_id,pool_size.
void write_log_csv(const RewardLog& log, std::ostream& out);

/// File name carrying the metadata summarize needs:
/// <algorithm>__<pattern>__seed<seed>.csv
std::string log_filename(const RewardLog& log);

}  // namespace allseason
