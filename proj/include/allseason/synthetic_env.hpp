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

#include "allseason/bandit_policy.hpp"
#include "allseason/rng.hpp"
#include "allseason/schedule.hpp"

namespace allseason {

/// Seasonal linear environment: rewards are <theta*_t, x> + N(0, sigma^2)
/// with theta*_t switching between the schedule's parameters, and action
/// sets are fresh unit-norm Gaussian vectors each step.
class SyntheticLinearEnv {
 public:
  SyntheticLinearEnv(ChangeSchedule schedule, int num_arms, int dimension,
                     double noise_variance);

  /// num_arms fresh Gaussian directions, each normalized to unit norm.
  ActionSet action_set(long t, Rng& action_rng) const;

  double reward(long t, const Eigen::VectorXd& action, Rng& noise_rng) const;

  /// Noiseless expected reward of the best arm in the set; used as an
  /// oracle reference in tests.
  double best_expected_reward(long t, const ActionSet& actions) const;

  const ChangeSchedule& schedule() const { return schedule_; }
  int num_arms() const { return num_arms_; }
  int dimension() const { return dimension_; }
  double noise_variance() const { return noise_variance_; }
  long horizon() const { return schedule_.horizon(); }

 private:
  ChangeSchedule schedule_;
  int num_arms_;
  int dimension_;
  double noise_variance_;
};

}  // namespace allseason
