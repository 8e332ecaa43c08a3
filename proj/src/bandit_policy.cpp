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

#include "allseason/bandit_policy.hpp"

#include <stdexcept>
#include <string>

namespace allseason {

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::LinTs:
      return "lints";
    case PolicyKind::SwLinTs:
      return "sw-lints";
    case PolicyKind::DLinTs:
      return "d-lints";
    case PolicyKind::Random:
      return "random";
  }
  return "unknown";
}

namespace {

void check_action_set(const ActionSet& actions) {
  if (actions.actions.empty()) {
    throw std::invalid_argument("play: action set must be non-empty");
  }
  const Eigen::Index d = actions.actions.front().size();
  for (const auto& x : actions.actions) {
    if (x.size() != d) {
      throw std::invalid_argument("play: action dimensions are not uniform");
    }
  }
}

}  // namespace

std::size_t argmax_action(const Eigen::VectorXd& theta,
                          const ActionSet& actions, Rng& tie_rng) {
  check_action_set(actions);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> maximizers;
  for (std::size_t i = 0; i < actions.actions.size(); ++i) {
    const double value = theta.dot(actions.actions[i]);
    if (value > best) {
      best = value;
      maximizers.assign(1, i);
    } else if (value == best) {
      maximizers.push_back(i);
    }
  }
  if (maximizers.size() == 1) return maximizers.front();
  return maximizers[uniform_index(tie_rng, maximizers.size())];
}

BanditPolicy::BanditPolicy(PolicyKind kind, GaussianBelief belief, int id)
    : kind_(kind), belief_(std::move(belief)), id_(id) {}

BanditPolicy BanditPolicy::lin_ts(int dimension, double lambda,
                                  double noise_variance, int id) {
  return BanditPolicy(PolicyKind::LinTs,
                      GaussianBelief(dimension, lambda, noise_variance), id);
}

BanditPolicy BanditPolicy::sw_lin_ts(int dimension, double lambda,
                                     double noise_variance, std::size_t window,
                                     int id) {
  if (window < 1) {
    throw std::invalid_argument("sw_lin_ts: window capacity must be >= 1");
  }
  BanditPolicy policy(PolicyKind::SwLinTs,
                      GaussianBelief(dimension, lambda, noise_variance), id);
  policy.window_capacity_ = window;
  return policy;
}

BanditPolicy BanditPolicy::d_lin_ts(int dimension, double lambda,
                                    double noise_variance, double discount,
                                    int id) {
  if (!(discount > 0.0) || discount > 1.0) {
    throw std::invalid_argument("d_lin_ts: discount must lie in (0, 1]");
  }
  BanditPolicy policy(PolicyKind::DLinTs,
                      GaussianBelief(dimension, lambda, noise_variance), id);
  policy.discount_ = discount;
  return policy;
}

BanditPolicy BanditPolicy::uniform_random(int dimension, int id) {
  return BanditPolicy(PolicyKind::Random,
                      GaussianBelief(dimension, 1.0, 1.0), id);
}

BanditPolicy BanditPolicy::lin_ts_from_belief(GaussianBelief belief, int id) {
  return BanditPolicy(PolicyKind::LinTs, std::move(belief), id);
}

std::size_t BanditPolicy::play(const ActionSet& actions, Rng& rng) const {
  return play(actions, rng, rng);
}

std::size_t BanditPolicy::play(const ActionSet& actions, Rng& sample_rng,
                               Rng& tie_rng) const {
  check_action_set(actions);
  if (kind_ == PolicyKind::Random) {
    return uniform_index(sample_rng, actions.actions.size());
  }
  if (actions.actions.front().size() != belief_.dimension()) {
    throw std::invalid_argument(
        "play: action dimension does not match the policy belief");
  }
  const Eigen::VectorXd theta = belief_.sample(sample_rng);
  return argmax_action(theta, actions, tie_rng);
}

void BanditPolicy::update(std::span<const Observation> batch) {
  if (kind_ == PolicyKind::Random || batch.empty()) return;
  switch (kind_) {
    case PolicyKind::LinTs:
      belief_.update(batch);
      break;
    case PolicyKind::SwLinTs: {
      for (const Observation& obs : batch) {
        if (obs.action.size() != belief_.dimension()) {
          throw std::invalid_argument(
              "update: observation dimension does not match the policy");
        }
        window_.push_back(obs);
      }
      while (window_.size() > window_capacity_) window_.pop_front();
      // Rebuild from the prior over the window contents. Downdating the
      // precision matrix instead can lose positive definiteness.
      GaussianBelief rebuilt(belief_.dimension(), belief_.lambda(),
                             belief_.noise_variance());
      const std::vector<Observation> contents(window_.begin(), window_.end());
      rebuilt.update(contents);
      belief_ = std::move(rebuilt);
      break;
    }
    case PolicyKind::DLinTs: {
      Eigen::MatrixXd precision = belief_.precision();
      Eigen::VectorXd information = belief_.information();
      const Eigen::MatrixXd ridge =
          (1.0 - discount_) * belief_.lambda() *
          Eigen::MatrixXd::Identity(belief_.dimension(), belief_.dimension());
      for (const Observation& obs : batch) {
        if (obs.action.size() != belief_.dimension()) {
          throw std::invalid_argument(
              "update: observation dimension does not match the policy");
        }
        precision *= discount_;
        precision.noalias() += obs.action * obs.action.transpose();
        precision += ridge;
        information *= discount_;
        information.noalias() += obs.reward * obs.action;
      }
      belief_ = GaussianBelief::with_state(belief_.lambda(),
                                           belief_.noise_variance(),
                                           std::move(precision),
                                           std::move(information));
      break;
    }
    case PolicyKind::Random:
      break;
  }
}

}  // namespace allseason
