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

#include <map>
#include <vector>

#include "allseason/bandit_policy.hpp"
#include "allseason/dataset.hpp"
#include "allseason/schedule.hpp"

namespace allseason {

enum class TaskMode { TwoArm, ArmShift };

/// Arms as blocks: arm a of K places the context into block a of a
/// K*p-dimensional vector, zeros elsewhere (one-hot outer product).
ActionSet build_contextualized_actions(const Eigen::VectorXd& context,
                                       int num_arms);

enum class DigitTask { Parity, DivisibleByThree, Primality };

/// label -> correct arm for the digit two-arm tasks. Arm 0 is the first arm
/// of each pair: even, divisible-by-three, non-prime (0 and 1 count as
/// non-prime; 2, 3, 5, 7 as prime).
std::vector<int> digit_task_table(DigitTask task);

/// label -> correct arm: arm 0 for labels in the given group, arm 1 else.
std::vector<int> group_task_table(const std::vector<int>& arm0_labels,
                                  int num_labels);

/// label -> correct arm under an arm permutation.
std::vector<int> shift_task_table(const std::vector<int>& permutation);

std::vector<int> random_permutation(int n, Rng& rng);

/// Synthetic stand-in for an image dataset: `num_classes` Gaussian clusters
/// in R^dimension with unit within-class spread and means `separation` away
/// from the origin along random unit directions. A positive `subspace_dim`
/// confines the means to a random subspace of that rank, giving the
/// low-rank class structure PCA-reduced image data shows.
Dataset gaussian_cluster_dataset(int num_classes, int dimension, long rows,
                                 double separation, Rng& rng,
                                 int subspace_dim = 0);

/// Classification problem replayed as a contextual bandit: step t presents
/// the contextualized actions of feature row ((t-1) mod n) and pays reward
/// one iff the chosen arm matches the active period's label->arm table.
class ClassificationEnv {
 public:
  ClassificationEnv(Eigen::MatrixXd features, std::vector<int> labels,
                    ChangeSchedule schedule, TaskMode mode,
                    std::map<int, std::vector<int>> task_tables, int num_arms);

  ActionSet action_set(long t) const;
  double reward(long t, std::size_t arm) const;

  /// 1 iff `arm` is the correct arm for `label` under task `param_id`.
  int task_reward(int label, std::size_t arm, int param_id) const;

  int label_at(long t) const;
  Eigen::VectorXd context_at(long t) const;

  const ChangeSchedule& schedule() const { return schedule_; }
  TaskMode mode() const { return mode_; }
  int num_arms() const { return num_arms_; }
  int context_dimension() const {
    return static_cast<int>(features_.cols());
  }
  int action_dimension() const { return num_arms_ * context_dimension(); }
  long horizon() const { return schedule_.horizon(); }

 private:
  std::size_t row_at(long t) const;

  Eigen::MatrixXd features_;
  std::vector<int> labels_;
  ChangeSchedule schedule_;
  TaskMode mode_;
  std::map<int, std::vector<int>> task_tables_;
  int num_arms_;
};

}  // namespace allseason
