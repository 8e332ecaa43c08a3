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

#include <iosfwd>
#include <string>
#include <vector>

#include "allseason/experiment.hpp"

namespace allseason {

/// One cell of the results table: mean of per-seed average rewards plus the
/// population standard deviation across seeds.
struct SummaryCell {
  std::string algorithm;
  std::string pattern;
  double mean = 0.0;
  double stddev = 0.0;
  int seeds = 0;
};

std::vector<SummaryCell> summarize(const std::vector<RewardLog>& logs);

/// Reads every run CSV in a directory. Algorithm and pattern come from the
/// <algorithm>__<pattern>__seed<k>.csv naming; files that do not follow it
/// are skipped. Cells never get imputed: absent data stays absent.
std::vector<SummaryCell> summarize_directory(const std::string& dir);

/// CSV columns: algorithm,pattern,mean,std,seeds.
void write_summary_csv(const std::vector<SummaryCell>& cells,
                       std::ostream& out);

/// Aligned text table for terminals.
std::string format_summary_table(const std::vector<SummaryCell>& cells);

}  // namespace allseason
