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

#include <deque>
#include <span>
#include <vector>

#include "allseason/gaussian_belief.hpp"
#include "allseason/rng.hpp"

namespace allseason {

/// The contextualized actions available at one time step.
struct ActionSet {
  std::vector<Eigen::VectorXd> actions;
  long t = 0;
};

enum class PolicyKind { LinTs, SwLinTs, DLinTs, Random };

const char* to_string(PolicyKind kind);

/// Index of the action maximizing <theta, x>, ties broken uniformly.
std::size_t argmax_action(const Eigen::VectorXd& theta,
                          const ActionSet& actions, Rng& tie_rng);

/// One action-selection policy: linear Thompson sampling, its
/// sliding-window and discounted variants, or the uniform-random baseline.
class BanditPolicy {
 public:
  static BanditPolicy lin_ts(int dimension, double lambda,
                             double noise_variance, int id = 0);
  static BanditPolicy sw_lin_ts(int dimension, double lambda,
                                double noise_variance, std::size_t window,
                                int id = 0);
  static BanditPolicy d_lin_ts(int dimension, double lambda,
                               double noise_variance, double discount,
                               int id = 0);
  static BanditPolicy uniform_random(int dimension, int id = 0);

  /// A plain LinTS policy seeded with an existing posterior. Used when a
  /// shadow bandit is promoted into the base pool.
  static BanditPolicy lin_ts_from_belief(GaussianBelief belief, int id);

  /// Samples theta from the belief (skipped for the Random kind) and returns
  /// the index of the maximizing action. The same generator serves sampling
  /// and tie-breaking.
  std::size_t play(const ActionSet& actions, Rng& rng) const;

  /// As above with a dedicated tie-breaking stream.
  std::size_t play(const ActionSet& actions, Rng& sample_rng,
                   Rng& tie_rng) const;

  /// Absorbs one batch of observations under the policy's forgetting rule:
  ///   LinTS      straight posterior update;
  ///   SW-LinTS   append to the window, evict beyond capacity, rebuild the
  ///              belief from the window contents;
  ///   D-LinTS    per observation M <- g*M + x x^T + (1-g)*lambda*I and
  ///              b <- g*b + r*x, then one mean solve;
  ///   Random     no-op.
  void update(std::span<const Observation> batch);

  PolicyKind kind() const { return kind_; }
  int id() const { return id_; }
  const GaussianBelief& belief() const { return belief_; }
  const std::deque<Observation>& window() const { return window_; }
  std::size_t window_capacity() const { return window_capacity_; }
  double discount() const { return discount_; }

 private:
  BanditPolicy(PolicyKind kind, GaussianBelief belief, int id);

  PolicyKind kind_;
  GaussianBelief belief_;
  std::deque<Observation> window_;
  std::size_t window_capacity_ = 0;
  double discount_ = 1.0;
  int id_ = 0;
};

}  // namespace allseason
