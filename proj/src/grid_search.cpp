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

#include "allseason/grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace allseason {

GridSpec load_grid_spec(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    throw std::runtime_error("grid: cannot open " + config_path);
  }
  nlohmann::json doc;
  in >> doc;
  GridSpec grid;
  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    if (g.contains("window")) {
      grid.window = g.at("window").get<std::vector<std::size_t>>();
    }
    if (g.contains("kappa")) {
      grid.kappa = g.at("kappa").get<std::vector<int>>();
    }
    if (g.contains("n_max")) {
      grid.n_max = g.at("n_max").get<std::vector<int>>();
    }
  }
  return grid;
}

namespace {

bool uses_window(const std::string& algorithm) {
  return algorithm == "sw-lints" || algorithm == "all-season-sw";
}

bool uses_discount(const std::string& algorithm) {
  return algorithm == "d-lints" || algorithm == "all-season-disc";
}

bool uses_pool(const std::string& algorithm) {
  return algorithm == "all-season-sw" || algorithm == "all-season-disc";
}

std::vector<PolicySpec> enumerate_points(const PolicySpec& base,
                                         const GridSpec& grid) {
  std::vector<std::size_t> windows =
      uses_window(base.algorithm) && !grid.window.empty()
          ? grid.window
          : std::vector<std::size_t>{base.window};
  std::vector<double> discounts;
  if (uses_discount(base.algorithm) && !grid.kappa.empty()) {
    for (int kappa : grid.kappa) {
      discounts.push_back(1.0 - std::pow(10.0, -kappa));
    }
  } else {
    discounts.push_back(base.discount);
  }
  std::vector<int> budgets = uses_pool(base.algorithm) && !grid.n_max.empty()
                                 ? grid.n_max
                                 : std::vector<int>{base.n_max};

  std::vector<PolicySpec> points;
  for (int n_max : budgets) {
    for (std::size_t window : windows) {
      for (double discount : discounts) {
        PolicySpec spec = base;
        spec.window = window;
        spec.discount = discount;
        spec.n_max = n_max;
        points.push_back(spec);
      }
    }
  }
  return points;
}

}  // namespace

GridReport grid_search(const ExperimentConfig& config, const GridSpec& grid) {
  validate(config);
  GridReport report;
  // Validation plays out on the first 10% of the stream only.
  report.validation_horizon = std::max<long>(1, config.horizon / 10);

  ExperimentConfig validation = config;
  validation.horizon = report.validation_horizon;
  // Fresh seeds, disjoint from the evaluation seeds by construction.
  validation.seeds.clear();
  for (std::uint64_t seed : config.seeds) {
    std::uint64_t state = seed ^ 0x5eedf00db5ULL;
    validation.seeds.push_back(splitmix64(state));
  }

  // The environment keeps the full-horizon schedule; validation runs simply
  // stop after the first tenth, so they replay the true stream's prefix.
  const PreparedEnvironment prepared =
      prepare_environment(validation.environment, config.horizon);

  for (const PolicySpec& point : enumerate_points(config.policy, grid)) {
    validation.policy = point;
    GridPointResult result;
    result.policy = point;
    for (std::uint64_t seed : validation.seeds) {
      const RewardLog log = run_experiment(validation, prepared, seed);
      result.per_seed.push_back(log.mean_reward());
    }
    double total = 0.0;
    for (double r : result.per_seed) total += r;
    result.mean_reward = total / static_cast<double>(result.per_seed.size());
    double ss = 0.0;
    for (double r : result.per_seed) {
      ss += (r - result.mean_reward) * (r - result.mean_reward);
    }
    result.std_reward =
        std::sqrt(ss / static_cast<double>(result.per_seed.size()));
    report.ranked.push_back(std::move(result));
  }

  // Rank by mean reward; ties prefer smaller tau, then larger gamma, then
  // smaller n_max (the less forgetful, lower-capacity configuration).
  std::stable_sort(report.ranked.begin(), report.ranked.end(),
                   [](const GridPointResult& a, const GridPointResult& b) {
                     if (a.mean_reward != b.mean_reward) {
                       return a.mean_reward > b.mean_reward;
                     }
                     if (a.policy.window != b.policy.window) {
                       return a.policy.window < b.policy.window;
                     }
                     if (a.policy.discount != b.policy.discount) {
                       return a.policy.discount > b.policy.discount;
                     }
                     return a.policy.n_max < b.policy.n_max;
                   });
  report.best = report.ranked.front().policy;
  return report;
}

void write_grid_report_csv(const GridReport& report, std::ostream& out) {
  out << "rank,algorithm,window,discount,n_max,mean,std,seeds\n";
  char mean_buf[40];
  char std_buf[40];
  char disc_buf[40];
  int rank = 1;
  for (const GridPointResult& result : report.ranked) {
    std::snprintf(mean_buf, sizeof(mean_buf), "%.6f", result.mean_reward);
    std::snprintf(std_buf, sizeof(std_buf), "%.6f", result.std_reward);
    std::snprintf(disc_buf, sizeof(disc_buf), "%.12g", result.policy.discount);
    out << rank++ << ',' << result.policy.algorithm << ','
        << result.policy.window << ',' << disc_buf << ','
        << result.policy.n_max << ',' << mean_buf << ',' << std_buf << ','
        << result.per_seed.size() << '\n';
  }
}

}  // namespace allseason
