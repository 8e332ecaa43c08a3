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

#include "allseason/idx.hpp"

#include <fstream>

namespace allseason {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("idx: cannot open " + path);
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

std::uint32_t read_u32(const std::vector<std::uint8_t>& bytes,
                       std::size_t offset, const std::string& path) {
  if (offset + 4 > bytes.size()) {
    throw FormatError("idx: " + path + " truncated at offset " +
                      std::to_string(offset) + ": expected 4 header bytes, " +
                      std::to_string(bytes.size() - offset) + " available");
  }
  return (static_cast<std::uint32_t>(bytes[offset]) << 24) |
         (static_cast<std::uint32_t>(bytes[offset + 1]) << 16) |
         (static_cast<std::uint32_t>(bytes[offset + 2]) << 8) |
         static_cast<std::uint32_t>(bytes[offset + 3]);
}

void write_u32(std::ofstream& out, std::uint32_t value) {
  const char bytes[4] = {static_cast<char>((value >> 24) & 0xff),
                         static_cast<char>((value >> 16) & 0xff),
                         static_cast<char>((value >> 8) & 0xff),
                         static_cast<char>(value & 0xff)};
  out.write(bytes, 4);
}

}  // namespace

RawDataset load_idx(const std::string& image_path,
                    const std::string& label_path) {
  const std::vector<std::uint8_t> image_bytes = read_file(image_path);
  const std::uint32_t image_magic = read_u32(image_bytes, 0, image_path);
  if (image_magic != kImageMagic) {
    char hex[16];
    std::snprintf(hex, sizeof(hex), "0x%08x", image_magic);
    throw FormatError("idx: " + image_path + " has magic " + hex +
                      " at offset 0, expected 0x00000803 (image tensor)");
  }
  const std::uint32_t count = read_u32(image_bytes, 4, image_path);
  const std::uint32_t rows = read_u32(image_bytes, 8, image_path);
  const std::uint32_t cols = read_u32(image_bytes, 12, image_path);
  const std::size_t pixels =
      static_cast<std::size_t>(count) * rows * cols;
  if (image_bytes.size() != 16 + pixels) {
    throw FormatError("idx: " + image_path + " pixel payload at offset 16: expected " +
                      std::to_string(pixels) + " bytes, found " +
                      std::to_string(image_bytes.size() - 16));
  }

  const std::vector<std::uint8_t> label_bytes = read_file(label_path);
  const std::uint32_t label_magic = read_u32(label_bytes, 0, label_path);
  if (label_magic != kLabelMagic) {
    char hex[16];
    std::snprintf(hex, sizeof(hex), "0x%08x", label_magic);
    throw FormatError("idx: " + label_path + " has magic " + hex +
                      " at offset 0, expected 0x00000801 (label vector)");
  }
  const std::uint32_t label_count = read_u32(label_bytes, 4, label_path);
  if (label_bytes.size() != 8 + label_count) {
    throw FormatError("idx: " + label_path + " label payload at offset 8: expected " +
                      std::to_string(label_count) + " bytes, found " +
                      std::to_string(label_bytes.size() - 8));
  }
  if (label_count != count) {
    throw FormatError("idx: image count " + std::to_string(count) + " in " +
                      image_path + " does not match label count " +
                      std::to_string(label_count) + " in " + label_path);
  }

  RawDataset data;
  data.images.resize(static_cast<Eigen::Index>(count),
                     static_cast<Eigen::Index>(rows * cols));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(rows) * cols; ++j) {
      data.images(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          image_bytes[16 + i * rows * cols + j];
    }
  }
  data.labels.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    data.labels[i] = static_cast<int>(label_bytes[8 + i]);
  }
  return data;
}

void write_idx(const RawDataset& data, const std::string& image_path,
               const std::string& label_path, int rows, int cols) {
  if (static_cast<Eigen::Index>(rows) * cols != data.images.cols()) {
    throw std::invalid_argument(
        "write_idx: rows*cols must match the image width");
  }
  if (static_cast<std::size_t>(data.images.rows()) != data.labels.size()) {
    throw std::invalid_argument(
        "write_idx: image count must match label count");
  }
  std::ofstream images(image_path, std::ios::binary);
  if (!images) throw std::runtime_error("write_idx: cannot write " + image_path);
  write_u32(images, kImageMagic);
  write_u32(images, static_cast<std::uint32_t>(data.images.rows()));
  write_u32(images, static_cast<std::uint32_t>(rows));
  write_u32(images, static_cast<std::uint32_t>(cols));
  for (Eigen::Index i = 0; i < data.images.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.images.cols(); ++j) {
      const char byte = static_cast<char>(data.images(i, j));
      images.write(&byte, 1);
    }
  }

  std::ofstream labels(label_path, std::ios::binary);
  if (!labels) throw std::runtime_error("write_idx: cannot write " + label_path);
  write_u32(labels, kLabelMagic);
  write_u32(labels, static_cast<std::uint32_t>(data.labels.size()));
  for (int label : data.labels) {
    const char byte = static_cast<char>(label);
    labels.write(&byte, 1);
  }
}

}  // namespace allseason
