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

#include "allseason/feature_table.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "allseason/idx.hpp"  // FormatError

namespace allseason {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& text, const std::string& path,
                    std::size_t line_number) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw FormatError("feature table: " + path + " line " +
                      std::to_string(line_number) + ": non-numeric cell '" +
                      text + "'");
  }
  if (consumed != text.size()) {
    throw FormatError("feature table: " + path + " line " +
                      std::to_string(line_number) + ": non-numeric cell '" +
                      text + "'");
  }
  return value;
}

}  // namespace

Dataset load_feature_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("feature table: cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("feature table: " + path + " is empty");
  }
  const std::vector<std::string> header = split_csv(line);
  if (header.size() < 2 || header.front() != "label") {
    throw FormatError("feature table: " + path +
                      " line 1: header must be label,f1,...,fp");
  }
  const std::size_t columns = header.size();

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != columns) {
      throw FormatError("feature table: " + path + " line " +
                        std::to_string(line_number) + ": expected " +
                        std::to_string(columns) + " columns, found " +
                        std::to_string(fields.size()));
    }
    const double label = parse_double(fields[0], path, line_number);
    labels.push_back(static_cast<int>(label));
    std::vector<double> row;
    row.reserve(columns - 1);
    for (std::size_t i = 1; i < columns; ++i) {
      row.push_back(parse_double(fields[i], path, line_number));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw FormatError("feature table: " + path + " has no data rows");
  }

  Dataset data;
  data.features.resize(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(columns - 1));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c + 1 < columns; ++c) {
      data.features(static_cast<Eigen::Index>(r),
                    static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  data.labels = std::move(labels);
  return data;
}

}  // namespace allseason
