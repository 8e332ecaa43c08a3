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

#include "allseason/gaussian_belief.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace allseason {

namespace {

// Relative residual above which a solve is rejected as numerically unsound.
constexpr double kSolveResidualTolerance = 1e-8;

}  // namespace

GaussianBelief::GaussianBelief(int dimension, double lambda,
                               double noise_variance) {
  if (dimension < 1) {
    throw std::invalid_argument("GaussianBelief: dimension must be >= 1, got " +
                                std::to_string(dimension));
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("GaussianBelief: lambda must be positive");
  }
  if (!(noise_variance > 0.0)) {
    throw std::invalid_argument(
        "GaussianBelief: noise variance must be positive");
  }
  dim_ = dimension;
  lambda_ = lambda;
  noise_var_ = noise_variance;
  precision_ = lambda * Eigen::MatrixXd::Identity(dimension, dimension);
  info_ = Eigen::VectorXd::Zero(dimension);
  refresh();
}

GaussianBelief GaussianBelief::with_state(double lambda, double noise_variance,
                                          Eigen::MatrixXd precision,
                                          Eigen::VectorXd information) {
  if (precision.rows() != precision.cols() || precision.rows() < 1) {
    throw std::invalid_argument("GaussianBelief: precision must be square");
  }
  if (information.size() != precision.rows()) {
    throw std::invalid_argument(
        "GaussianBelief: information vector size does not match precision");
  }
  if (!(lambda > 0.0) || !(noise_variance > 0.0)) {
    throw std::invalid_argument(
        "GaussianBelief: lambda and noise variance must be positive");
  }
  const double asym = (precision - precision.transpose()).cwiseAbs().maxCoeff();
  const double scale = precision.cwiseAbs().maxCoeff();
  if (asym > 1e-10 * std::max(scale, 1.0)) {
    throw std::invalid_argument("GaussianBelief: precision must be symmetric");
  }
  GaussianBelief belief;
  belief.dim_ = static_cast<int>(precision.rows());
  belief.lambda_ = lambda;
  belief.noise_var_ = noise_variance;
  belief.precision_ = std::move(precision);
  belief.info_ = std::move(information);
  belief.refresh();
  return belief;
}

void GaussianBelief::update(std::span<const Observation> batch) {
  if (batch.empty()) return;
  for (const Observation& obs : batch) {
    if (obs.action.size() != dim_) {
      throw std::invalid_argument(
          "GaussianBelief: observation dimension " +
          std::to_string(obs.action.size()) + " does not match belief " +
          std::to_string(dim_));
    }
    if (!obs.action.allFinite() || !std::isfinite(obs.reward)) {
      throw std::invalid_argument(
          "GaussianBelief: observation entries must be finite");
    }
  }
  for (const Observation& obs : batch) {
    precision_.noalias() += obs.action * obs.action.transpose();
    info_.noalias() += obs.reward * obs.action;
  }
  refresh();
}

void GaussianBelief::refresh() {
  chol_.compute(precision_);
  if (chol_.info() != Eigen::Success) {
    throw std::runtime_error(
        "GaussianBelief: precision matrix is not positive definite");
  }
  mean_ = chol_.solve(info_);
  const double b_norm = info_.norm();
  if (b_norm > 0.0) {
    const double residual = (precision_ * mean_ - info_).norm() / b_norm;
    if (residual > kSolveResidualTolerance) {
      throw std::runtime_error(
          "GaussianBelief: mean solve residual " + std::to_string(residual) +
          " exceeds tolerance");
    }
  }
}

Eigen::VectorXd GaussianBelief::sample(Rng& rng) const {
  const Eigen::VectorXd z = standard_normal_vector(rng, dim_);
  // M = L L^T, so mu + L^{-T} z has covariance M^{-1}.
  return mean_ + chol_.matrixU().solve(z);
}

double GaussianBelief::predictive_variance(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument(
        "GaussianBelief: action dimension does not match belief");
  }
  const Eigen::VectorXd w = chol_.matrixL().solve(x);
  return noise_var_ + w.squaredNorm();
}

double GaussianBelief::predictive_logdensity(const Eigen::VectorXd& x,
                                             double r) const {
  const double variance = predictive_variance(x);
  const double mean = mean_.dot(x);
  const double diff = r - mean;
  return -0.5 * (std::log(2.0 * std::numbers::pi * variance) +
                 diff * diff / variance);
}

double GaussianBelief::covariance_trace() const {
  return chol_.solve(Eigen::MatrixXd::Identity(dim_, dim_)).trace();
}

Eigen::MatrixXd GaussianBelief::covariance() const {
  return chol_.solve(Eigen::MatrixXd::Identity(dim_, dim_));
}

double symmetric_kl(const GaussianBelief& a, const GaussianBelief& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("symmetric_kl: dimension mismatch");
  }
  const int d = a.dimension();
  const Eigen::MatrixXd cov_a = a.covariance();
  const Eigen::MatrixXd cov_b = b.covariance();
  // tr(S2^{-1} S1) = tr(M2 S1); both factors are symmetric, so the trace is
  // the elementwise product sum.
  const double trace_term = 0.5 * (b.precision().cwiseProduct(cov_a).sum() +
                                   a.precision().cwiseProduct(cov_b).sum());
  const Eigen::VectorXd delta = b.mean() - a.mean();
  const double quad =
      0.5 * delta.dot((a.precision() + b.precision()) * delta);
  return trace_term - static_cast<double>(d) + quad;
}

}  // namespace allseason
