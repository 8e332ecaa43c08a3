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

#include "allseason/classification_env.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace allseason {

ActionSet build_contextualized_actions(const Eigen::VectorXd& context,
                                       int num_arms) {
  if (num_arms < 2) {
    throw std::invalid_argument(
        "build_contextualized_actions: need at least two arms");
  }
  if (context.size() < 1) {
    throw std::invalid_argument(
        "build_contextualized_actions: context must be non-empty");
  }
  const Eigen::Index p = context.size();
  ActionSet set;
  set.actions.reserve(static_cast<std::size_t>(num_arms));
  for (int a = 0; a < num_arms; ++a) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(num_arms * p);
    x.segment(a * p, p) = context;
    set.actions.push_back(std::move(x));
  }
  return set;
}

std::vector<int> digit_task_table(DigitTask task) {
  std::vector<int> table(10, 1);
  switch (task) {
    case DigitTask::Parity:
      for (int d = 0; d < 10; ++d) table[d] = (d % 2 == 0) ? 0 : 1;
      break;
    case DigitTask::DivisibleByThree:
      for (int d = 0; d < 10; ++d) table[d] = (d % 3 == 0) ? 0 : 1;
      break;
    case DigitTask::Primality:
      for (int d = 0; d < 10; ++d) {
        const bool prime = d == 2 || d == 3 || d == 5 || d == 7;
        table[d] = prime ? 1 : 0;  // arm 0 is "non prime"
      }
      break;
  }
  return table;
}

std::vector<int> group_task_table(const std::vector<int>& arm0_labels,
                                  int num_labels) {
  std::vector<int> table(static_cast<std::size_t>(num_labels), 1);
  for (int label : arm0_labels) {
    if (label < 0 || label >= num_labels) {
      throw std::invalid_argument("group_task_table: label out of range");
    }
    table[static_cast<std::size_t>(label)] = 0;
  }
  return table;
}

std::vector<int> shift_task_table(const std::vector<int>& permutation) {
  std::vector<bool> seen(permutation.size(), false);
  for (int arm : permutation) {
    if (arm < 0 || arm >= static_cast<int>(permutation.size()) ||
        seen[static_cast<std::size_t>(arm)]) {
      throw std::invalid_argument("shift_task_table: not a permutation");
    }
    seen[static_cast<std::size_t>(arm)] = true;
  }
  return permutation;
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
  }
  return perm;
}

Dataset gaussian_cluster_dataset(int num_classes, int dimension, long rows,
                                 double separation, Rng& rng,
                                 int subspace_dim) {
  if (num_classes < 2 || dimension < 1 || rows < 1) {
    throw std::invalid_argument("gaussian_cluster_dataset: bad shape");
  }
  if (subspace_dim < 0 || subspace_dim > dimension) {
    throw std::invalid_argument(
        "gaussian_cluster_dataset: subspace rank out of range");
  }
  const int rank = subspace_dim == 0 ? dimension : subspace_dim;
  // Orthonormal basis of the mean subspace via Gram-Schmidt.
  std::vector<Eigen::VectorXd> basis;
  while (static_cast<int>(basis.size()) < rank) {
    Eigen::VectorXd v = standard_normal_vector(rng, dimension);
    for (const Eigen::VectorXd& b : basis) v -= v.dot(b) * b;
    const double norm = v.norm();
    if (norm > 1e-8) basis.push_back(v / norm);
  }
  std::vector<Eigen::VectorXd> means;
  means.reserve(static_cast<std::size_t>(num_classes));
  for (int c = 0; c < num_classes; ++c) {
    Eigen::VectorXd coeff = standard_normal_vector(rng, rank);
    double norm = coeff.norm();
    while (norm == 0.0) {
      coeff = standard_normal_vector(rng, rank);
      norm = coeff.norm();
    }
    coeff *= separation / norm;
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(dimension);
    for (int j = 0; j < rank; ++j) mean += coeff(j) * basis[static_cast<std::size_t>(j)];
    means.push_back(std::move(mean));
  }
  Dataset data;
  data.features.resize(rows, dimension);
  data.labels.resize(static_cast<std::size_t>(rows));
  for (long r = 0; r < rows; ++r) {
    const int label =
        static_cast<int>(uniform_index(rng, static_cast<std::size_t>(num_classes)));
    data.labels[static_cast<std::size_t>(r)] = label;
    data.features.row(r) =
        (means[static_cast<std::size_t>(label)] +
         standard_normal_vector(rng, dimension))
            .transpose();
  }
  return data;
}

ClassificationEnv::ClassificationEnv(Eigen::MatrixXd features,
                                     std::vector<int> labels,
                                     ChangeSchedule schedule, TaskMode mode,
                                     std::map<int, std::vector<int>> task_tables,
                                     int num_arms)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      schedule_(std::move(schedule)),
      mode_(mode),
      task_tables_(std::move(task_tables)),
      num_arms_(num_arms) {
  if (features_.rows() < 1 || features_.cols() < 1) {
    throw std::invalid_argument("ClassificationEnv: empty feature matrix");
  }
  if (static_cast<std::size_t>(features_.rows()) != labels_.size()) {
    throw std::invalid_argument(
        "ClassificationEnv: feature row count does not match label count");
  }
  if (num_arms_ < 2) {
    throw std::invalid_argument("ClassificationEnv: need at least two arms");
  }
  for (const Period& p : schedule_.periods()) {
    const auto it = task_tables_.find(p.param_id);
    if (it == task_tables_.end()) {
      throw std::invalid_argument(
          "ClassificationEnv: no task table for period parameter " +
          std::to_string(p.param_id));
    }
    for (int arm : it->second) {
      if (arm < 0 || arm >= num_arms_) {
        throw std::invalid_argument(
            "ClassificationEnv: task table references arm out of range");
      }
    }
  }
  for (int label : labels_) {
    if (label < 0) {
      throw std::invalid_argument("ClassificationEnv: negative label");
    }
  }
}

std::size_t ClassificationEnv::row_at(long t) const {
  if (t < 1 || t > schedule_.horizon()) {
    throw std::invalid_argument("ClassificationEnv: step outside horizon");
  }
  return static_cast<std::size_t>((t - 1) %
                                  static_cast<long>(features_.rows()));
}

int ClassificationEnv::label_at(long t) const { return labels_[row_at(t)]; }

Eigen::VectorXd ClassificationEnv::context_at(long t) const {
  return features_.row(static_cast<Eigen::Index>(row_at(t))).transpose();
}

ActionSet ClassificationEnv::action_set(long t) const {
  ActionSet set = build_contextualized_actions(context_at(t), num_arms_);
  set.t = t;
  return set;
}

int ClassificationEnv::task_reward(int label, std::size_t arm,
                                   int param_id) const {
  if (arm >= static_cast<std::size_t>(num_arms_)) {
    throw std::invalid_argument("task_reward: arm out of range");
  }
  const auto it = task_tables_.find(param_id);
  if (it == task_tables_.end()) {
    throw std::invalid_argument("task_reward: unknown task id " +
                                std::to_string(param_id));
  }
  if (label < 0 || label >= static_cast<int>(it->second.size())) {
    throw std::invalid_argument("task_reward: unknown label " +
                                std::to_string(label));
  }
  return it->second[static_cast<std::size_t>(label)] ==
                 static_cast<int>(arm)
             ? 1
             : 0;
}

double ClassificationEnv::reward(long t, std::size_t arm) const {
  return static_cast<double>(
      task_reward(label_at(t), arm, schedule_.param_id_at(t)));
}

}  // namespace allseason
