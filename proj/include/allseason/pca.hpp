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

#include <Eigen/Core>

namespace allseason {

/// Fitted principal-component model. Component rows are orthonormal; the
/// explained-variance ratios are non-increasing and sum to at most one.
struct PcaModel {
  Eigen::VectorXd mean;                      // p
  Eigen::MatrixXd components;                // q x p
  Eigen::VectorXd explained_variance_ratio;  // q

  int input_dimension() const { return static_cast<int>(components.cols()); }
  int output_dimension() const { return static_cast<int>(components.rows()); }
};

/// Retain either a fixed component count or the smallest count reaching a
/// cumulative explained-variance fraction.
struct PcaTarget {
  static PcaTarget component_count(int q) { return {q, -1.0}; }
  static PcaTarget variance_fraction(double v) { return {-1, v}; }

  int q = -1;
  double fraction = -1.0;
};

/// Centers the data and eigendecomposes its covariance. Eigenvalues below
/// 1e-10 of the largest count as zero; each component's sign is fixed so its
/// largest-magnitude entry is positive, keeping fitted models reproducible.
PcaModel pca_fit(const Eigen::MatrixXd& data, const PcaTarget& target);

/// (rows - mean) * components^T, the q-dimensional contexts.
Eigen::MatrixXd pca_transform(const PcaModel& model,
                              const Eigen::MatrixXd& rows);

}  // namespace allseason
