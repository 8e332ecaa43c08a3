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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace allseason {

/// Malformed input file; the message names the file and byte offset or line.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw MNIST-style corpus: byte intensities, one flattened image per row.
struct RawDataset {
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      images;
  std::vector<int> labels;

  Eigen::MatrixXd images_as_double() const {
    return images.cast<double>();
  }
};

/// Parses the big-endian IDX pair: magic 0x00000803 image tensors flattened
/// to rows*cols-vectors and magic 0x00000801 label vectors.
RawDataset load_idx(const std::string& image_path,
                    const std::string& label_path);

/// Writes a dataset back in IDX form; rows*cols must equal the image width.
void write_idx(const RawDataset& data, const std::string& image_path,
               const std::string& label_path, int rows = 28, int cols = 28);

}  // namespace allseason
