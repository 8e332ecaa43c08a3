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

#include <string>

#include "allseason/dataset.hpp"

namespace allseason {

/// Loads a comma-delimited text table with header `label,f1,...,fp` followed
/// by one integer label and p decimal features per row. Ragged or
/// non-numeric rows raise a FormatError naming the line.
Dataset load_feature_table(const std::string& path);

}  // namespace allseason
