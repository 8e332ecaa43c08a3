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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "allseason/feature_table.hpp"
#include "allseason/idx.hpp"
#include "allseason/pca.hpp"
#include "allseason/rng.hpp"

using allseason::FormatError;
using allseason::PcaModel;
using allseason::PcaTarget;
using allseason::RawDataset;
using allseason::Rng;

namespace {

std::filesystem::path temp_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "allseason-data-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

RawDataset synthetic_raw(int n, int rows, int cols, Rng& rng) {
  RawDataset data;
  data.images.resize(n, rows * cols);
  data.labels.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < rows * cols; ++j) {
      data.images(i, j) =
          static_cast<std::uint8_t>(allseason::uniform_index(rng, 256));
    }
    data.labels[static_cast<std::size_t>(i)] =
        static_cast<int>(allseason::uniform_index(rng, 10));
  }
  return data;
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("idx round trip is bit exact") {
  Rng rng(1);
  const RawDataset original = synthetic_raw(23, 4, 5, rng);
  const auto dir = temp_dir();
  const auto images = dir / "images.idx";
  const auto labels = dir / "labels.idx";
  allseason::write_idx(original, images.string(), labels.string(), 4, 5);
  const RawDataset loaded = allseason::load_idx(images.string(), labels.string());
  CHECK(loaded.images == original.images);
  CHECK(loaded.labels == original.labels);
}

TEST_CASE("label magic in an image slot is reported with its offset") {
  Rng rng(2);
  const RawDataset data = synthetic_raw(3, 2, 2, rng);
  const auto dir = temp_dir();
  const auto images = dir / "im.idx";
  const auto labels = dir / "lb.idx";
  allseason::write_idx(data, images.string(), labels.string(), 2, 2);
  // Swap the two paths: the label file magic lands in the image slot.
  try {
    allseason::load_idx(labels.string(), images.string());
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    const std::string message = e.what();
    CHECK(message.find("0x00000801") != std::string::npos);
    CHECK(message.find("offset 0") != std::string::npos);
  }
}

TEST_CASE("truncated pixel payloads name expected and actual counts") {
  // Header claims 2 images of 2x2 but carries 7 of the 8 pixel bytes.
  std::vector<unsigned char> bytes = {0, 0, 8, 3, 0, 0, 0, 2, 0, 0, 0, 2,
                                      0, 0, 0, 2, 9, 9, 9, 9, 9, 9, 9};
  const auto dir = temp_dir();
  const auto images = dir / "trunc.idx";
  write_bytes(images, bytes);
  std::vector<unsigned char> label_bytes = {0, 0, 8, 1, 0, 0, 0, 2, 1, 2};
  const auto labels = dir / "trunc-labels.idx";
  write_bytes(labels, label_bytes);
  try {
    allseason::load_idx(images.string(), labels.string());
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    const std::string message = e.what();
    CHECK(message.find("expected 8") != std::string::npos);
    CHECK(message.find("found 7") != std::string::npos);
  }
}

TEST_CASE("image and label counts must agree") {
  Rng rng(3);
  const RawDataset data = synthetic_raw(4, 2, 2, rng);
  RawDataset fewer_labels = data;
  fewer_labels.labels.pop_back();
  fewer_labels.images.conservativeResize(3, Eigen::NoChange);
  const auto dir = temp_dir();
  allseason::write_idx(data, (dir / "a.idx").string(), (dir / "al.idx").string(),
                       2, 2);
  allseason::write_idx(fewer_labels, (dir / "b.idx").string(),
                       (dir / "bl.idx").string(), 2, 2);
  CHECK_THROWS_AS(
      allseason::load_idx((dir / "a.idx").string(), (dir / "bl.idx").string()),
      FormatError);
}

TEST_CASE("optional real MNIST smoke check") {
  const char* dir = std::getenv("MNIST_DIR");
  if (dir == nullptr) return;  // whole corpora stay out of the repo
  const RawDataset data =
      allseason::load_idx(std::string(dir) + "/train-images-idx3-ubyte",
                          std::string(dir) + "/train-labels-idx1-ubyte");
  CHECK(data.images.rows() == 60000);
  CHECK(data.images.cols() == 784);
}

TEST_CASE("pca components are orthonormal with ordered ratios") {
  Rng rng(4);
  Eigen::MatrixXd data(300, 8);
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      data(i, j) = allseason::standard_normal(rng) * (1.0 + double(j));
    }
  }
  const PcaModel model = allseason::pca_fit(data, PcaTarget::component_count(5));
  const Eigen::MatrixXd gram = model.components * model.components.transpose();
  CHECK((gram - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() <=
        1e-8);
  double previous = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (Eigen::Index i = 0; i < 5; ++i) {
    const double ratio = model.explained_variance_ratio(i);
    CHECK(ratio <= previous);
    CHECK(ratio >= 0.0);
    previous = ratio;
    total += ratio;
  }
  CHECK(total <= 1.0 + 1e-9);
}

TEST_CASE("a one-dimensional spread produces its axis as first component") {
  Rng rng(5);
  Eigen::MatrixXd data = Eigen::MatrixXd::Zero(100, 4);
  for (Eigen::Index i = 0; i < 100; ++i) {
    data(i, 0) = allseason::standard_normal(rng) * 3.0;
  }
  const PcaModel model = allseason::pca_fit(data, PcaTarget::component_count(1));
  CHECK(model.components(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(model.explained_variance_ratio(0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("transforming the mean yields zero and projection contracts") {
  Rng rng(6);
  Eigen::MatrixXd data(200, 6);
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      data(i, j) = allseason::standard_normal(rng) + 2.0;
    }
  }
  const PcaModel model = allseason::pca_fit(data, PcaTarget::component_count(3));
  const Eigen::MatrixXd mean_transformed =
      allseason::pca_transform(model, model.mean.transpose());
  CHECK(mean_transformed.cwiseAbs().maxCoeff() <= 1e-12);

  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::VectorXd row = allseason::standard_normal_vector(rng, 6);
    const Eigen::MatrixXd transformed =
        allseason::pca_transform(model, row.transpose());
    CHECK(transformed.row(0).norm() <= (row - model.mean).norm() + 1e-12);
  }
}

TEST_CASE("in-span rows survive the round trip") {
  Rng rng(7);
  // Rows drawn from a 3-dimensional subspace of R^6.
  Eigen::MatrixXd basis(3, 6);
  for (Eigen::Index i = 0; i < 3; ++i) {
    basis.row(i) = allseason::standard_normal_vector(rng, 6).transpose();
  }
  Eigen::MatrixXd data(150, 6);
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    data.row(i) = (basis.transpose() * allseason::standard_normal_vector(rng, 3))
                      .transpose();
  }
  const PcaModel model = allseason::pca_fit(data, PcaTarget::component_count(3));
  const Eigen::MatrixXd reduced = allseason::pca_transform(model, data);
  const Eigen::MatrixXd restored =
      (reduced * model.components).rowwise() + model.mean.transpose();
  CHECK((restored - data).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("discarded variance matches the ratio bookkeeping") {
  Rng rng(8);
  Eigen::MatrixXd data(400, 7);
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      data(i, j) = allseason::standard_normal(rng) * (1.0 + 0.5 * double(j));
    }
  }
  const PcaModel model = allseason::pca_fit(data, PcaTarget::component_count(4));
  const Eigen::MatrixXd reduced = allseason::pca_transform(model, data);
  const Eigen::MatrixXd restored =
      (reduced * model.components).rowwise() + model.mean.transpose();

  const Eigen::MatrixXd centered = data.rowwise() - model.mean.transpose();
  const double total_variance =
      centered.squaredNorm() / static_cast<double>(data.rows());
  const double residual_variance =
      (data - restored).squaredNorm() / static_cast<double>(data.rows());
  const double retained = model.explained_variance_ratio.sum();
  CHECK(residual_variance / total_variance ==
        doctest::Approx(1.0 - retained).epsilon(1e-6));
}

TEST_CASE("variance-fraction targets pick the smallest sufficient count") {
  Rng rng(9);
  Eigen::MatrixXd data(500, 5);
  // Variances around 16, 4, 1, 0.25, 0.0625.
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      data(i, j) = allseason::standard_normal(rng) * std::pow(2.0, 2 - double(j));
    }
  }
  const PcaModel model =
      allseason::pca_fit(data, PcaTarget::variance_fraction(0.90));
  CHECK(model.output_dimension() == 2);  // (16+4)/21.3 ~ 0.94
  const PcaModel all =
      allseason::pca_fit(data, PcaTarget::variance_fraction(1.0));
  CHECK(all.output_dimension() == 5);
}

TEST_CASE("pca rejects bad targets and shapes") {
  Eigen::MatrixXd data(10, 3);
  data.setRandom();
  CHECK_THROWS_AS(allseason::pca_fit(data, PcaTarget::component_count(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(allseason::pca_fit(data, PcaTarget::component_count(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(allseason::pca_fit(data, PcaTarget::variance_fraction(0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(allseason::pca_fit(data.topRows(1),
                                     PcaTarget::component_count(1)),
                  std::invalid_argument);
  const PcaModel model = allseason::pca_fit(data, PcaTarget::component_count(2));
  Eigen::MatrixXd wrong(2, 5);
  wrong.setZero();
  CHECK_THROWS_AS(allseason::pca_transform(model, wrong),
                  std::invalid_argument);
}

TEST_CASE("feature tables load and validate") {
  const auto dir = temp_dir();
  const auto good = dir / "good.csv";
  {
    std::ofstream out(good);
    out << "label,f1,f2,f3\n";
    out << "0,1.0,2.0,3.0\n";
    out << "1,-0.5,0.25,4\n";
    out << "2,0,0,1e-3\n";
  }
  const allseason::Dataset data = allseason::load_feature_table(good.string());
  CHECK(data.features.rows() == 3);
  CHECK(data.features.cols() == 3);
  CHECK(data.labels == std::vector<int>{0, 1, 2});
  CHECK(data.features(1, 2) == 4.0);

  const auto ragged = dir / "ragged.csv";
  {
    std::ofstream out(ragged);
    out << "label,f1,f2\n";
    out << "0,1.0,2.0\n";
    out << "1,3.0\n";
  }
  try {
    allseason::load_feature_table(ragged.string());
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  const auto textual = dir / "textual.csv";
  {
    std::ofstream out(textual);
    out << "label,f1\n";
    out << "0,abc\n";
  }
  try {
    allseason::load_feature_table(textual.string());
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  const auto empty = dir / "empty.csv";
  { std::ofstream out(empty); }
  CHECK_THROWS_AS(allseason::load_feature_table(empty.string()), FormatError);

  const auto headerless = dir / "headerless.csv";
  {
    std::ofstream out(headerless);
    out << "0,1.0,2.0\n";
  }
  CHECK_THROWS_AS(allseason::load_feature_table(headerless.string()),
                  FormatError);

  const auto header_only = dir / "header-only.csv";
  {
    std::ofstream out(header_only);
    out << "label,f1\n";
  }
  CHECK_THROWS_AS(allseason::load_feature_table(header_only.string()),
                  FormatError);
}
