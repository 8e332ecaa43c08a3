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

#include "allseason/experiment.hpp"

namespace allseason {

/// Hyperparameter axes; empty axes fall back to the base policy's value.
/// The regularizer is not an axis: it stays fixed at the configured lambda.
struct GridSpec {
  std::vector<std::size_t> window;  // tau
  std::vector<int> kappa;           // gamma = 1 - 10^-kappa
  std::vector<int> n_max;
};

GridSpec load_grid_spec(const std::string& config_path);

struct GridPointResult {
  PolicySpec policy;
  double mean_reward = 0.0;
  double std_reward = 0.0;
  std::vector<double> per_seed;
};

struct GridReport {
  std::vector<GridPointResult> ranked;  // best first
  PolicySpec best;
  long validation_horizon = 0;
};

/// Evaluates every grid point on the first 10% of the stream with fresh
/// validation seeds derived from the config seeds, ranks by mean reward and
/// breaks ties toward smaller tau, larger gamma, then smaller n_max.
GridReport grid_search(const ExperimentConfig& config, const GridSpec& grid);

void write_grid_report_csv(const GridReport& report, std::ostream& out);

}  // namespace allseason
