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

#include "allseason/pca.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace allseason {

PcaModel pca_fit(const Eigen::MatrixXd& data, const PcaTarget& target) {
  const Eigen::Index n = data.rows();
  const Eigen::Index p = data.cols();
  if (n < 2) {
    throw std::invalid_argument("pca_fit: need at least two rows");
  }
  if (target.q < 0 && !(target.fraction > 0.0 && target.fraction <= 1.0)) {
    throw std::invalid_argument(
        "pca_fit: target must give a component count or a variance fraction "
        "in (0, 1]");
  }
  if (target.q >= 0 && (target.q < 1 || target.q > p)) {
    throw std::invalid_argument(
        "pca_fit: component count must lie in [1, feature dimension]");
  }

  const Eigen::VectorXd mean = data.colwise().mean();
  const Eigen::MatrixXd centered = data.rowwise() - mean.transpose();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(p, p);
  cov.selfadjointView<Eigen::Lower>().rankUpdate(centered.transpose(),
                                                 1.0 / static_cast<double>(n));
  cov = cov.selfadjointView<Eigen::Lower>();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("pca_fit: eigendecomposition failed");
  }

  // Ascending from the solver; reorder to descending and clamp the noise
  // floor relative to the largest eigenvalue.
  Eigen::VectorXd values(p);
  Eigen::MatrixXd vectors(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    values(i) = solver.eigenvalues()(p - 1 - i);
    vectors.col(i) = solver.eigenvectors().col(p - 1 - i);
  }
  const double floor = 1e-10 * std::max(values(0), 0.0);
  double total = 0.0;
  for (Eigen::Index i = 0; i < p; ++i) {
    if (values(i) < floor) values(i) = 0.0;
    total += values(i);
  }
  if (total <= 0.0) {
    throw std::invalid_argument("pca_fit: data has zero variance");
  }

  Eigen::Index q;
  if (target.q >= 1) {
    q = target.q;
  } else {
    double cumulative = 0.0;
    q = p;
    for (Eigen::Index i = 0; i < p; ++i) {
      cumulative += values(i) / total;
      if (cumulative >= target.fraction) {
        q = i + 1;
        break;
      }
    }
  }

  PcaModel model;
  model.mean = mean;
  model.components.resize(q, p);
  model.explained_variance_ratio.resize(q);
  for (Eigen::Index i = 0; i < q; ++i) {
    Eigen::VectorXd component = vectors.col(i);
    // Deterministic sign: the largest-magnitude entry points positive.
    Eigen::Index arg = 0;
    component.cwiseAbs().maxCoeff(&arg);
    if (component(arg) < 0.0) component = -component;
    model.components.row(i) = component.transpose();
    model.explained_variance_ratio(i) = values(i) / total;
  }
  return model;
}

Eigen::MatrixXd pca_transform(const PcaModel& model,
                              const Eigen::MatrixXd& rows) {
  if (rows.cols() != model.components.cols()) {
    throw std::invalid_argument(
        "pca_transform: row dimension does not match the fitted model");
  }
  return (rows.rowwise() - model.mean.transpose()) *
         model.components.transpose();
}

}  // namespace allseason
