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

#include "allseason/bandit_pool.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace allseason {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void append_number(std::string& line, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), " %.17g", value);
  line += buf;
}

}  // namespace

std::vector<double> normalize_log_weights(std::span<const double> log_scores) {
  std::vector<double> weights(log_scores.size(), 0.0);
  if (log_scores.empty()) return weights;
  double max_score = kNegInf;
  for (double s : log_scores) {
    if (std::isnan(s)) max_score = std::numeric_limits<double>::quiet_NaN();
    if (s > max_score) max_score = s;
  }
  if (!std::isfinite(max_score)) {
    // Every member underflowed (or a score degenerated): uniform fallback.
    const double u = 1.0 / static_cast<double>(log_scores.size());
    std::fill(weights.begin(), weights.end(), u);
    return weights;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < log_scores.size(); ++i) {
    weights[i] = std::exp(log_scores[i] - max_score);
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return weights;
}

BanditPool::BanditPool(const PoolConfig& config)
    : cfg_(config),
      shadow_(BanditPolicy::lin_ts(std::max(config.dimension, 1), 1.0, 1.0,
                                   kShadowId)) {
  if (cfg_.dimension < 1) {
    throw std::invalid_argument("BanditPool: dimension must be >= 1");
  }
  if (cfg_.n_max < 1) {
    throw std::invalid_argument("BanditPool: n_max must be >= 1");
  }
  shadow_ = make_shadow();
  bases_.push_back(BanditPolicy::lin_ts(cfg_.dimension, cfg_.lambda,
                                        cfg_.noise_variance, next_id_++));
  if (cfg_.shadow_enabled) {
    weights_ = {0.5, 0.5};
  } else {
    weights_ = {1.0, 0.0};
  }
}

BanditPolicy BanditPool::make_shadow() const {
  if (cfg_.shadow_kind == ShadowKind::SlidingWindow) {
    return BanditPolicy::sw_lin_ts(cfg_.dimension, cfg_.lambda,
                                   cfg_.noise_variance, cfg_.window,
                                   kShadowId);
  }
  return BanditPolicy::d_lin_ts(cfg_.dimension, cfg_.lambda,
                                cfg_.noise_variance, cfg_.discount, kShadowId);
}

BanditPool BanditPool::with_members(const PoolConfig& config,
                                    std::vector<BanditPolicy> bases,
                                    std::optional<BanditPolicy> shadow) {
  if (bases.empty()) {
    throw std::invalid_argument("with_members: at least one base required");
  }
  BanditPool pool(config);
  pool.bases_ = std::move(bases);
  if (shadow.has_value()) pool.shadow_ = std::move(*shadow);
  int max_id = kShadowId;
  for (const auto& base : pool.bases_) max_id = std::max(max_id, base.id());
  pool.next_id_ = max_id + 1;
  const std::size_t n = pool.member_count();
  const std::size_t selectable = config.shadow_enabled ? n : n - 1;
  pool.weights_.assign(n, 0.0);
  for (std::size_t i = 0; i < selectable; ++i) {
    pool.weights_[i] = 1.0 / static_cast<double>(selectable);
  }
  return pool;
}

int BanditPool::member_id(std::size_t index) const {
  return index < bases_.size() ? bases_[index].id() : kShadowId;
}

const BanditPolicy& BanditPool::member(std::size_t index) const {
  return index < bases_.size() ? bases_[index] : shadow_;
}

const GaussianBelief& BanditPool::scoring_belief(std::size_t index) const {
  if (snapshots_.size() == member_count()) return snapshots_[index];
  return member(index).belief();
}

std::vector<int> BanditPool::member_ids() const {
  std::vector<int> ids;
  ids.reserve(member_count());
  for (const auto& base : bases_) ids.push_back(base.id());
  ids.push_back(kShadowId);
  return ids;
}

double BanditPool::weight_of(int id) const {
  for (std::size_t i = 0; i < member_count(); ++i) {
    if (member_id(i) == id) return weights_[i];
  }
  throw std::invalid_argument("weight_of: unknown bandit id");
}

int BanditPool::argmax_weight_id() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < member_count(); ++i) {
    if (weights_[i] > weights_[best]) best = i;
  }
  return member_id(best);
}

std::size_t BanditPool::select_index(Rng& select_rng) {
  const std::size_t limit =
      cfg_.shadow_enabled ? member_count() : bases_.size();
  double total = 0.0;
  bool finite = true;
  for (std::size_t i = 0; i < limit; ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) finite = false;
    total += weights_[i];
  }
  if (!finite || !(total > 0.0)) {
    ++degenerate_events_;
    return uniform_index(select_rng, limit);
  }
  double x = uniform_unit(select_rng) * total;
  for (std::size_t i = 0; i < limit; ++i) {
    x -= weights_[i];
    if (x < 0.0) return i;
  }
  return limit - 1;
}

int BanditPool::select_bandit(Rng& select_rng) {
  return member_id(select_index(select_rng));
}

std::vector<StepOutcome> BanditPool::run_batch(std::span<const ActionSet> steps,
                                               const RewardCallback& feedback,
                                               RngStreams& rngs) {
  if (steps.empty()) {
    throw std::invalid_argument("run_batch: batch must be non-empty");
  }
  std::vector<std::vector<Observation>> assigned(bases_.size());
  std::vector<Observation> batch;
  batch.reserve(steps.size());
  std::vector<StepOutcome> outcomes;
  outcomes.reserve(steps.size());
  bool shadow_played = false;

  for (const ActionSet& actions : steps) {
    ++t_;
    const std::size_t idx = select_index(rngs.bandit_select);
    const std::size_t arm =
        member(idx).play(actions, rngs.policy, rngs.tie_break);
    const double reward = feedback(t_, arm, actions);
    Observation obs{actions.actions[arm], reward};
    if (idx == shadow_index()) {
      shadow_played = true;
    } else {
      assigned[idx].push_back(obs);
    }
    outcomes.push_back(
        {t_, arm, reward, member_id(idx), static_cast<int>(bases_.size())});
    batch.push_back(std::move(obs));
  }

  end_batch(batch, assigned, shadow_played);
  return outcomes;
}

void BanditPool::end_batch(std::span<const Observation> batch,
                           std::vector<std::vector<Observation>>& assigned,
                           bool shadow_played) {
  if (shadow_played && cfg_.shadow_enabled) {
    promote_shadow();
    assigned.emplace_back();  // the promoted base owns no assignments yet
  }
  // Pre-batch beliefs for the weight update. The promoted base's belief is
  // the shadow's pre-refresh posterior, so snapshotting after promotion
  // still captures pre-batch state for every member.
  snapshots_.clear();
  snapshots_.reserve(member_count());
  for (std::size_t i = 0; i < member_count(); ++i) {
    snapshots_.push_back(member(i).belief());
  }
  if (cfg_.shadow_enabled) refresh_shadow(batch);
  for (std::size_t j = 0; j < bases_.size(); ++j) {
    if (!assigned[j].empty()) bases_[j].update(assigned[j]);
  }
  prune();
  update_weights(batch);
  snapshots_.clear();
}

void BanditPool::promote_shadow() {
  bases_.push_back(
      BanditPolicy::lin_ts_from_belief(shadow_.belief(), next_id_++));
  weights_.insert(weights_.end() - 1, 0.0);
}

void BanditPool::refresh_shadow(std::span<const Observation> batch) {
  shadow_.update(batch);
}

void BanditPool::update_weights(std::span<const Observation> batch) {
  if (batch.empty()) return;
  const std::size_t limit =
      cfg_.shadow_enabled ? member_count() : bases_.size();
  std::vector<double> scores(limit, 0.0);
  for (std::size_t i = 0; i < limit; ++i) {
    const GaussianBelief& belief = scoring_belief(i);
    double total = 0.0;
    for (const Observation& obs : batch) {
      total += belief.predictive_logdensity(obs.action, obs.reward);
    }
    scores[i] = total;
  }
  double max_score = kNegInf;
  for (double s : scores) max_score = std::max(max_score, s);
  if (!std::isfinite(max_score)) ++degenerate_events_;
  const std::vector<double> normalized = normalize_log_weights(scores);
  weights_.assign(member_count(), 0.0);
  for (std::size_t i = 0; i < limit; ++i) weights_[i] = normalized[i];
}

void BanditPool::prune() {
  while (static_cast<int>(bases_.size()) > cfg_.n_max) {
    // One covariance solve per member, reused across all pair metrics.
    std::vector<Eigen::MatrixXd> covariances;
    if (cfg_.prune_metric == PruneMetric::SymmetricKl) {
      covariances.reserve(bases_.size());
      for (const BanditPolicy& base : bases_) {
        covariances.push_back(base.belief().covariance());
      }
    }
    const double dim = static_cast<double>(cfg_.dimension);
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    double best_metric = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < bases_.size(); ++i) {
      for (std::size_t j = i + 1; j < bases_.size(); ++j) {
        double metric;
        if (cfg_.prune_metric == PruneMetric::SymmetricKl) {
          const GaussianBelief& a = bases_[i].belief();
          const GaussianBelief& b = bases_[j].belief();
          const double trace_term =
              0.5 * (b.precision().cwiseProduct(covariances[i]).sum() +
                     a.precision().cwiseProduct(covariances[j]).sum());
          const Eigen::VectorXd delta = b.mean() - a.mean();
          metric = trace_term - dim +
                   0.5 * delta.dot((a.precision() + b.precision()) * delta);
        } else {
          metric =
              (bases_[i].belief().mean() - bases_[j].belief().mean()).norm();
        }
        if (metric < best_metric) {
          best_metric = metric;
          best_i = i;
          best_j = j;
        }
      }
    }
    const double trace_i =
        covariances.empty() ? bases_[best_i].belief().covariance_trace()
                            : covariances[best_i].trace();
    const double trace_j =
        covariances.empty() ? bases_[best_j].belief().covariance_trace()
                            : covariances[best_j].trace();
    std::size_t victim;
    if (trace_i == trace_j) {
      // Equal uncertainty: drop the newer member and keep seniority.
      victim = bases_[best_i].id() > bases_[best_j].id() ? best_i : best_j;
    } else if (cfg_.prune_victim == PruneVictim::LessCertain) {
      victim = trace_i > trace_j ? best_i : best_j;
    } else {
      victim = trace_i < trace_j ? best_i : best_j;
    }
    if (snapshots_.size() == member_count()) {
      snapshots_.erase(snapshots_.begin() +
                       static_cast<std::ptrdiff_t>(victim));
    }
    bases_.erase(bases_.begin() + static_cast<std::ptrdiff_t>(victim));
    weights_.erase(weights_.begin() + static_cast<std::ptrdiff_t>(victim));
  }
}

void BanditPool::dump_state(std::ostream& out) const {
  out << "allseason-pool-state v1\n";
  out << "dimension " << cfg_.dimension << '\n';
  std::string line = "lambda";
  append_number(line, cfg_.lambda);
  out << line << '\n';
  line = "sigma2";
  append_number(line, cfg_.noise_variance);
  out << line << '\n';
  out << "members " << member_count() << '\n';
  for (std::size_t i = 0; i < member_count(); ++i) {
    const BanditPolicy& pol = member(i);
    out << "member id " << member_id(i) << " kind " << to_string(pol.kind())
        << '\n';
    const GaussianBelief& belief = pol.belief();
    line = "M";
    for (Eigen::Index r = 0; r < belief.precision().rows(); ++r) {
      for (Eigen::Index c = 0; c < belief.precision().cols(); ++c) {
        append_number(line, belief.precision()(r, c));
      }
    }
    out << line << '\n';
    line = "b";
    for (Eigen::Index r = 0; r < belief.information().size(); ++r) {
      append_number(line, belief.information()(r));
    }
    out << line << '\n';
  }
  line = "weights";
  for (double w : weights_) append_number(line, w);
  out << line << '\n';
}

}  // namespace allseason
