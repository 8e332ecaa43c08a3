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

#include "allseason/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace allseason {

ChangeSchedule::ChangeSchedule(long horizon, std::vector<Period> periods,
                               std::map<int, Eigen::VectorXd> parameters)
    : horizon_(horizon),
      periods_(std::move(periods)),
      parameters_(std::move(parameters)) {
  if (horizon_ < 1) {
    throw std::invalid_argument("ChangeSchedule: horizon must be >= 1");
  }
  if (periods_.empty()) {
    throw std::invalid_argument("ChangeSchedule: at least one period needed");
  }
  long expected_start = 1;
  for (const Period& p : periods_) {
    if (p.start != expected_start || p.end < p.start) {
      throw std::invalid_argument(
          "ChangeSchedule: periods must partition [1, horizon] without gaps "
          "or overlaps");
    }
    expected_start = p.end + 1;
    if (!parameters_.empty() && parameters_.find(p.param_id) == parameters_.end()) {
      throw std::invalid_argument(
          "ChangeSchedule: period references parameter id " +
          std::to_string(p.param_id) + " missing from the table");
    }
  }
  if (periods_.back().end != horizon_) {
    throw std::invalid_argument(
        "ChangeSchedule: periods must cover the horizon exactly");
  }
}

std::size_t ChangeSchedule::period_index_at(long t) const {
  if (t < 1 || t > horizon_) {
    throw std::invalid_argument("ChangeSchedule: step " + std::to_string(t) +
                                " outside [1, " + std::to_string(horizon_) +
                                "]");
  }
  // Binary search over period starts.
  std::size_t lo = 0;
  std::size_t hi = periods_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (periods_[mid].start <= t) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int ChangeSchedule::param_id_at(long t) const {
  return periods_[period_index_at(t)].param_id;
}

const Eigen::VectorXd& ChangeSchedule::parameter(int id) const {
  const auto it = parameters_.find(id);
  if (it == parameters_.end()) {
    throw std::invalid_argument("ChangeSchedule: no parameter with id " +
                                std::to_string(id));
  }
  return it->second;
}

const Eigen::VectorXd& ChangeSchedule::parameter_at(long t) const {
  return parameter(param_id_at(t));
}

std::vector<long> ChangeSchedule::change_points() const {
  std::vector<long> points;
  for (std::size_t i = 1; i < periods_.size(); ++i) {
    points.push_back(periods_[i].start);
  }
  return points;
}

SchedulePattern schedule_pattern_from_string(const std::string& name) {
  if (name == "regular") return SchedulePattern::Regular;
  if (name == "realistic") return SchedulePattern::Realistic;
  if (name == "extreme") return SchedulePattern::Extreme;
  throw std::invalid_argument("unknown schedule pattern: " + name);
}

const char* to_string(SchedulePattern pattern) {
  switch (pattern) {
    case SchedulePattern::Regular:
      return "regular";
    case SchedulePattern::Realistic:
      return "realistic";
    case SchedulePattern::Extreme:
      return "extreme";
  }
  return "unknown";
}

namespace {

std::vector<Period> periods_from_lengths(const std::vector<long>& lengths,
                                         const std::vector<int>& ids) {
  std::vector<Period> periods;
  long start = 1;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    periods.push_back({start, start + lengths[i] - 1, ids[i]});
    start += lengths[i];
  }
  return periods;
}

}  // namespace

ChangeSchedule make_schedule(SchedulePattern pattern, long horizon,
                             const std::vector<int>& param_ids, Rng& rng,
                             long min_segment) {
  if (param_ids.size() < 2) {
    throw std::invalid_argument(
        "make_schedule: at least two parameter ids required");
  }
  if (min_segment < 1) {
    throw std::invalid_argument("make_schedule: min_segment must be >= 1");
  }
  std::vector<int> ids = param_ids;
  std::sort(ids.begin(), ids.end());
  const long k = static_cast<long>(ids.size());

  std::vector<long> lengths;
  std::vector<int> period_ids;

  switch (pattern) {
    case SchedulePattern::Regular: {
      const long segments = 2 * k;
      const long base = horizon / segments;
      if (base < min_segment) {
        throw std::invalid_argument(
            "make_schedule: horizon too short for the regular pattern");
      }
      lengths.assign(static_cast<std::size_t>(segments), base);
      lengths.back() += horizon - base * segments;
      for (long i = 0; i < segments; ++i) {
        period_ids.push_back(ids[static_cast<std::size_t>(i % k)]);
      }
      break;
    }
    case SchedulePattern::Realistic: {
      if (horizon < 12 * min_segment) {
        throw std::invalid_argument(
            "make_schedule: horizon too short for the realistic pattern");
      }
      long remaining = horizon;
      bool next_short = false;
      while (remaining > 0) {
        long len;
        if (remaining < 12 * min_segment) {
          len = remaining;  // final segment absorbs the tail
        } else if (next_short) {
          len = min_segment +
                static_cast<long>(uniform_index(
                    rng, static_cast<std::size_t>(min_segment + 1)));
        } else {
          len = 5 * min_segment +
                static_cast<long>(uniform_index(
                    rng, static_cast<std::size_t>(5 * min_segment + 1)));
        }
        lengths.push_back(len);
        remaining -= len;
        next_short = !next_short;
      }
      int current = ids[uniform_index(rng, ids.size())];
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        period_ids.push_back(current);
        // next parameter differs from the current one
        const std::size_t offset = 1 + uniform_index(rng, ids.size() - 1);
        const std::size_t pos =
            (static_cast<std::size_t>(
                 std::find(ids.begin(), ids.end(), current) - ids.begin()) +
             offset) %
            ids.size();
        current = ids[pos];
      }
      break;
    }
    case SchedulePattern::Extreme: {
      const long segments = horizon / min_segment;
      if (segments < 2) {
        throw std::invalid_argument(
            "make_schedule: horizon too short for the extreme pattern");
      }
      lengths.assign(static_cast<std::size_t>(segments), min_segment);
      lengths.back() += horizon - min_segment * segments;
      for (long i = 0; i < segments; ++i) {
        period_ids.push_back(ids[static_cast<std::size_t>(i % k)]);
      }
      break;
    }
  }

  return ChangeSchedule(horizon, periods_from_lengths(lengths, period_ids));
}

ChangeSchedule make_schedule(SchedulePattern pattern, long horizon,
                             const std::map<int, Eigen::VectorXd>& parameters,
                             Rng& rng, long min_segment) {
  std::vector<int> ids;
  for (const auto& [id, value] : parameters) ids.push_back(id);
  ChangeSchedule layout =
      make_schedule(pattern, horizon, ids, rng, min_segment);
  return ChangeSchedule(layout.horizon(), layout.periods(), parameters);
}

ChangeSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_schedule: cannot open " + path);
  }
  nlohmann::json doc;
  in >> doc;
  const long horizon = doc.at("horizon").get<long>();
  std::vector<Period> periods;
  for (const auto& p : doc.at("periods")) {
    periods.push_back({p.at("start").get<long>(), p.at("end").get<long>(),
                       p.at("param").get<int>()});
  }
  std::map<int, Eigen::VectorXd> parameters;
  if (doc.contains("parameters")) {
    for (const auto& [key, values] : doc.at("parameters").items()) {
      Eigen::VectorXd v(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = values[i].get<double>();
      }
      parameters.emplace(std::stoi(key), std::move(v));
    }
  }
  return ChangeSchedule(horizon, std::move(periods), std::move(parameters));
}

void save_schedule(const ChangeSchedule& schedule, const std::string& path) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["horizon"] = schedule.horizon();
  doc["periods"] = nlohmann::json::array();
  for (const Period& p : schedule.periods()) {
    doc["periods"].push_back(
        {{"start", p.start}, {"end", p.end}, {"param", p.param_id}});
  }
  if (!schedule.parameters().empty()) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [id, v] : schedule.parameters()) {
      nlohmann::json values = nlohmann::json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) values.push_back(v(i));
      params[std::to_string(id)] = values;
    }
    doc["parameters"] = params;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_schedule: cannot write " + path);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace allseason
