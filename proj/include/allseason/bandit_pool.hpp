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

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "allseason/bandit_policy.hpp"

namespace allseason {

enum class ShadowKind { SlidingWindow, Discounted };
enum class PruneMetric { SymmetricKl, MeanDistance };
enum class PruneVictim { LessCertain, MoreCertain };

struct PoolConfig {
  int dimension = 1;
  double lambda = 1.0;
  double noise_variance = 1.0;
  int n_max = 4;
  ShadowKind shadow_kind = ShadowKind::SlidingWindow;
  std::size_t window = 100;   // tau, sliding-window shadow
  double discount = 0.999;    // gamma, discounted shadow
  PruneMetric prune_metric = PruneMetric::SymmetricKl;
  PruneVictim prune_victim = PruneVictim::LessCertain;
  // When false the shadow keeps weight zero, is never selected and never
  // promoted; the pool degenerates to its base bandits. Diagnostic knob.
  bool shadow_enabled = true;
};

/// One executed step of a pool batch.
struct StepOutcome {
  long t = 0;
  std::size_t arm = 0;
  double reward = 0.0;
  int bandit_id = 0;
  int pool_size = 0;  // base-bandit count while the step ran
};

/// Exponentiates log scores with max-subtraction and normalizes to sum one.
/// Adding a common constant to all scores leaves the result unchanged.
std::vector<double> normalize_log_weights(std::span<const double> log_scores);

/// Pool of long-term LinTS base bandits plus one short-term shadow bandit.
///
/// Each step samples the acting bandit from posterior-predictive weights.
/// At batch boundaries the pool promotes the shadow into a new base when the
/// shadow played, refreshes the shadow on the batch, updates each base on
/// its own assignments, prunes down to the base budget, and recomputes the
/// weights from each member's pre-batch predictive likelihood of the batch.
class BanditPool {
 public:
  using RewardCallback =
      std::function<double(long t, std::size_t arm, const ActionSet& actions)>;

  explicit BanditPool(const PoolConfig& config);

  /// Builds a pool around existing members; weights start uniform.
  static BanditPool with_members(const PoolConfig& config,
                                 std::vector<BanditPolicy> bases,
                                 std::optional<BanditPolicy> shadow = {});

  /// Samples one member id with probability proportional to its weight.
  /// Falls back to a uniform draw over the members (and counts the event)
  /// when the weights have degenerated to zero.
  int select_bandit(Rng& select_rng);

  /// Runs one batch end to end: per step select, play, observe; then the
  /// batch-boundary pipeline in order: promotion, shadow refresh, base
  /// updates, pruning, weight update.
  std::vector<StepOutcome> run_batch(std::span<const ActionSet> steps,
                                     const RewardCallback& feedback,
                                     RngStreams& rngs);

  /// Appends a base bandit copying the shadow's current posterior. The new
  /// member has weight zero until the next weight update.
  void promote_shadow();

  /// Feeds the batch to the shadow regardless of who played. The sliding
  /// window variant rebuilds on the most recent min(tau, t) observations;
  /// the discounted variant decays and accumulates.
  void refresh_shadow(std::span<const Observation> batch);

  /// Recomputes weights from each member's summed predictive log-density of
  /// the batch. Inside run_batch members are scored with their pre-batch
  /// beliefs; standalone calls score with current beliefs. An empty batch
  /// leaves the weights unchanged.
  void update_weights(std::span<const Observation> batch);

  /// While above the base budget, removes the less useful member of the
  /// closest base pair (symmetric KL or mean distance, per config).
  void prune();

  int base_count() const { return static_cast<int>(bases_.size()); }
  int n_max() const { return cfg_.n_max; }
  static constexpr int kShadowId = 0;
  const std::vector<BanditPolicy>& bases() const { return bases_; }
  const BanditPolicy& shadow() const { return shadow_; }
  const PoolConfig& config() const { return cfg_; }

  /// Weights aligned with member_ids(): bases in order, then the shadow.
  std::vector<double> weights() const { return weights_; }
  std::vector<int> member_ids() const;
  double weight_of(int id) const;
  int argmax_weight_id() const;

  long steps_seen() const { return t_; }
  long degenerate_weight_events() const { return degenerate_events_; }

  /// Versioned structured-text dump of the pool state for golden tests.
  void dump_state(std::ostream& out) const;

 private:
  std::size_t member_count() const { return bases_.size() + 1; }
  std::size_t shadow_index() const { return bases_.size(); }
  int member_id(std::size_t index) const;
  const BanditPolicy& member(std::size_t index) const;
  const GaussianBelief& scoring_belief(std::size_t index) const;
  std::size_t select_index(Rng& select_rng);
  void end_batch(std::span<const Observation> batch,
                 std::vector<std::vector<Observation>>& assigned,
                 bool shadow_played);
  BanditPolicy make_shadow() const;

  PoolConfig cfg_;
  std::vector<BanditPolicy> bases_;
  BanditPolicy shadow_;
  std::vector<double> weights_;          // bases..., shadow
  std::vector<GaussianBelief> snapshots_;  // pre-batch beliefs, scratch
  int next_id_ = 1;
  long t_ = 0;
  long degenerate_events_ = 0;
};

}  // namespace allseason
