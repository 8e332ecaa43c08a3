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

#include "allseason/synthetic_env.hpp"

#include <cmath>
#include <stdexcept>

namespace allseason {

SyntheticLinearEnv::SyntheticLinearEnv(ChangeSchedule schedule, int num_arms,
                                       int dimension, double noise_variance)
    : schedule_(std::move(schedule)),
      num_arms_(num_arms),
      dimension_(dimension),
      noise_variance_(noise_variance) {
  if (num_arms_ < 1) {
    throw std::invalid_argument("SyntheticLinearEnv: num_arms must be >= 1");
  }
  if (dimension_ < 1) {
    throw std::invalid_argument("SyntheticLinearEnv: dimension must be >= 1");
  }
  if (noise_variance_ < 0.0) {
    throw std::invalid_argument(
        "SyntheticLinearEnv: noise variance must be >= 0");
  }
  if (schedule_.parameters().empty()) {
    throw std::invalid_argument(
        "SyntheticLinearEnv: schedule needs a parameter table");
  }
  for (const auto& [id, theta] : schedule_.parameters()) {
    if (theta.size() != dimension_) {
      throw std::invalid_argument(
          "SyntheticLinearEnv: parameter dimension mismatch for id " +
          std::to_string(id));
    }
  }
}

ActionSet SyntheticLinearEnv::action_set(long t, Rng& action_rng) const {
  if (t < 1 || t > schedule_.horizon()) {
    throw std::invalid_argument("SyntheticLinearEnv: step outside horizon");
  }
  ActionSet set;
  set.t = t;
  set.actions.reserve(static_cast<std::size_t>(num_arms_));
  for (int i = 0; i < num_arms_; ++i) {
    Eigen::VectorXd x = standard_normal_vector(action_rng, dimension_);
    double norm = x.norm();
    while (norm == 0.0) {
      x = standard_normal_vector(action_rng, dimension_);
      norm = x.norm();
    }
    set.actions.push_back(x / norm);
  }
  return set;
}

double SyntheticLinearEnv::reward(long t, const Eigen::VectorXd& action,
                                  Rng& noise_rng) const {
  if (t < 1 || t > schedule_.horizon()) {
    throw std::invalid_argument("SyntheticLinearEnv: step outside horizon");
  }
  if (action.size() != dimension_) {
    throw std::invalid_argument("SyntheticLinearEnv: action dimension mismatch");
  }
  const double noise =
      std::sqrt(noise_variance_) * standard_normal(noise_rng);
  return schedule_.parameter_at(t).dot(action) + noise;
}

double SyntheticLinearEnv::best_expected_reward(long t,
                                                const ActionSet& actions) const {
  const Eigen::VectorXd& theta = schedule_.parameter_at(t);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& x : actions.actions) best = std::max(best, theta.dot(x));
  return best;
}

}  // namespace allseason
