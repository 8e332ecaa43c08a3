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
#include <string>
#include <vector>

#include <Eigen/Core>

#include "allseason/rng.hpp"

namespace allseason {

/// One stationary period: steps [start, end] (1-based, inclusive) governed
/// by the parameter with the given id.
struct Period {
  long start = 0;
  long end = 0;
  int param_id = 0;
};

/// Piecewise-constant map from time step to stationary-period parameter.
/// The parameter table may be empty when the ids are abstract regime labels
/// (classification tasks); it must cover every id when present.
class ChangeSchedule {
 public:
  ChangeSchedule(long horizon, std::vector<Period> periods,
                 std::map<int, Eigen::VectorXd> parameters = {});

  long horizon() const { return horizon_; }
  const std::vector<Period>& periods() const { return periods_; }
  const std::map<int, Eigen::VectorXd>& parameters() const {
    return parameters_;
  }

  std::size_t period_index_at(long t) const;
  int param_id_at(long t) const;
  const Eigen::VectorXd& parameter(int id) const;
  const Eigen::VectorXd& parameter_at(long t) const;

  /// First steps of periods 2..n: the steps where the parameter switches.
  std::vector<long> change_points() const;
  long change_point_count() const {
    return static_cast<long>(periods_.size()) - 1;
  }

 private:
  long horizon_ = 0;
  std::vector<Period> periods_;
  std::map<int, Eigen::VectorXd> parameters_;
};

enum class SchedulePattern { Regular, Realistic, Extreme };

SchedulePattern schedule_pattern_from_string(const std::string& name);
const char* to_string(SchedulePattern pattern);

/// Generates a schedule of the named pattern over abstract parameter ids:
///   regular    two full cycles through the ids in equal long segments;
///   realistic  alternating long ([5m, 10m]) and short ([m, 2m]) segments
///              with randomized parameter order (no immediate repeats);
///   extreme    every segment at the minimum length m, cycling the ids.
/// The last segment absorbs any remainder so the periods partition [1, T].
ChangeSchedule make_schedule(SchedulePattern pattern, long horizon,
                             const std::vector<int>& param_ids, Rng& rng,
                             long min_segment = 600);

/// As above with a concrete parameter table attached.
ChangeSchedule make_schedule(SchedulePattern pattern, long horizon,
                             const std::map<int, Eigen::VectorXd>& parameters,
                             Rng& rng, long min_segment = 600);

ChangeSchedule load_schedule(const std::string& path);
void save_schedule(const ChangeSchedule& schedule, const std::string& path);

}  // namespace allseason
