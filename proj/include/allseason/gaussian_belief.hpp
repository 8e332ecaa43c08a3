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

#include <span>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "allseason/rng.hpp"

namespace allseason {

/// One contextualized action together with its observed reward.
struct Observation {
  Eigen::VectorXd action;
  double reward = 0.0;
};

/// Conjugate Gaussian posterior over a linear reward parameter.
///
/// State is the precision matrix M = lambda*I + sum_s x_s x_s^T, the
/// information vector b = sum_s r_s x_s and the mean solving M*mu = b.
/// The observation noise variance sigma^2 is a fixed model hyperparameter.
/// Values are plain snapshots: copying gives an independent belief, and all
/// randomness flows through an explicitly passed generator.
class GaussianBelief {
 public:
  GaussianBelief(int dimension, double lambda, double noise_variance);

  /// Restores a belief from explicit precision/information state.
  /// The precision must be symmetric positive definite.
  static GaussianBelief with_state(double lambda, double noise_variance,
                                   Eigen::MatrixXd precision,
                                   Eigen::VectorXd information);

  /// Absorbs a batch of observations, one rank-1 update per observation in
  /// order, then recomputes the mean through a fresh Cholesky solve. An empty
  /// batch leaves the belief bitwise untouched.
  void update(std::span<const Observation> batch);

  /// Draws theta ~ N(mu, M^{-1}) using the cached Cholesky factor of M.
  Eigen::VectorXd sample(Rng& rng) const;

  /// Log posterior-predictive density of reward r under action x:
  /// log N(r; <mu, x>, sigma^2 + x^T M^{-1} x). Kept in log space so batch
  /// products never underflow.
  double predictive_logdensity(const Eigen::VectorXd& x, double r) const;

  /// sigma^2 + x^T M^{-1} x. Never below sigma^2.
  double predictive_variance(const Eigen::VectorXd& x) const;

  /// tr(M^{-1}).
  double covariance_trace() const;

  /// M^{-1}, the posterior covariance.
  Eigen::MatrixXd covariance() const;

  int dimension() const { return dim_; }
  double lambda() const { return lambda_; }
  double noise_variance() const { return noise_var_; }
  const Eigen::MatrixXd& precision() const { return precision_; }
  const Eigen::VectorXd& information() const { return info_; }
  const Eigen::VectorXd& mean() const { return mean_; }

 private:
  GaussianBelief() = default;
  void refresh();

  int dim_ = 0;
  double lambda_ = 1.0;
  double noise_var_ = 1.0;
  Eigen::MatrixXd precision_;
  Eigen::VectorXd info_;
  Eigen::VectorXd mean_;
  Eigen::LLT<Eigen::MatrixXd> chol_;
};

/// KL(p, q) + KL(q, p) between the posterior Gaussians of two beliefs,
/// computed with the closed form for multivariate normals. Symmetric in its
/// arguments and zero iff the parameters coincide.
double symmetric_kl(const GaussianBelief& a, const GaussianBelief& b);

}  // namespace allseason
