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

#include "allseason/summary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace allseason {

namespace {

struct CellKey {
  std::string algorithm;
  std::string pattern;
  bool operator<(const CellKey& other) const {
    if (algorithm != other.algorithm) return algorithm < other.algorithm;
    return pattern < other.pattern;
  }
};

std::vector<SummaryCell> cells_from_means(
    const std::map<CellKey, std::vector<double>>& per_seed_means) {
  std::vector<SummaryCell> cells;
  for (const auto& [key, means] : per_seed_means) {
    SummaryCell cell;
    cell.algorithm = key.algorithm;
    cell.pattern = key.pattern;
    cell.seeds = static_cast<int>(means.size());
    double total = 0.0;
    for (double m : means) total += m;
    cell.mean = total / static_cast<double>(means.size());
    double ss = 0.0;
    for (double m : means) ss += (m - cell.mean) * (m - cell.mean);
    cell.stddev = std::sqrt(ss / static_cast<double>(means.size()));
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace

std::vector<SummaryCell> summarize(const std::vector<RewardLog>& logs) {
  std::map<CellKey, std::vector<double>> per_seed_means;
  for (const RewardLog& log : logs) {
    per_seed_means[{log.algorithm, log.pattern}].push_back(log.mean_reward());
  }
  return cells_from_means(per_seed_means);
}

std::vector<SummaryCell> summarize_directory(const std::string& dir) {
  std::map<CellKey, std::vector<double>> per_seed_means;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    const std::string stem = path.stem().string();
    const std::size_t first = stem.find("__");
    const std::size_t second =
        first == std::string::npos ? std::string::npos
                                   : stem.find("__", first + 2);
    if (second == std::string::npos ||
        stem.compare(second + 2, 4, "seed") != 0) {
      continue;  // not a run log
    }
    const std::string algorithm = stem.substr(0, first);
    const std::string pattern = stem.substr(first + 2, second - first - 2);

    std::ifstream in(path);
    std::string line;
    if (!std::getline(in, line)) continue;  // header
    double total = 0.0;
    long count = 0;
    while (std::getline(in, line)) {
      // reward is column 6 of seed,batch,t,algorithm,arm,reward,...
      std::istringstream row(line);
      std::string field;
      for (int i = 0; i < 6 && std::getline(row, field, ','); ++i) {
      }
      total += std::stod(field);
      ++count;
    }
    if (count == 0) continue;
    per_seed_means[{algorithm, pattern}].push_back(
        total / static_cast<double>(count));
  }
  return cells_from_means(per_seed_means);
}

void write_summary_csv(const std::vector<SummaryCell>& cells,
                       std::ostream& out) {
  out << "algorithm,pattern,mean,std,seeds\n";
  char mean_buf[40];
  char std_buf[40];
  for (const SummaryCell& cell : cells) {
    std::snprintf(mean_buf, sizeof(mean_buf), "%.6f", cell.mean);
    std::snprintf(std_buf, sizeof(std_buf), "%.6f", cell.stddev);
    out << cell.algorithm << ',' << cell.pattern << ',' << mean_buf << ','
        << std_buf << ',' << cell.seeds << '\n';
  }
}

std::string format_summary_table(const std::vector<SummaryCell>& cells) {
  std::size_t algo_width = std::string("algorithm").size();
  std::size_t pattern_width = std::string("pattern").size();
  for (const SummaryCell& cell : cells) {
    algo_width = std::max(algo_width, cell.algorithm.size());
    pattern_width = std::max(pattern_width, cell.pattern.size());
  }
  std::ostringstream out;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %14s  %6s\n",
                static_cast<int>(algo_width), "algorithm",
                static_cast<int>(pattern_width), "pattern", "mean +/- std",
                "seeds");
  out << buf;
  for (const SummaryCell& cell : cells) {
    char value[48];
    std::snprintf(value, sizeof(value), "%.2f +/- %.2f", cell.mean,
                  cell.stddev);
    std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %14s  %6d\n",
                  static_cast<int>(algo_width), cell.algorithm.c_str(),
                  static_cast<int>(pattern_width), cell.pattern.c_str(), value,
                  cell.seeds);
    out << buf;
  }
  return out.str();
}

}  // namespace allseason
