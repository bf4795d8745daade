// Copyright 2026 The bboxer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBOXER_DATASET_H_
#define BBOXER_DATASET_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bboxer {

// Labeled examples, features stored row-major.
struct LabeledDataset {
  std::size_t dim = 0;
  uint32_t classes = 0;
  std::vector<double> features;
  std::vector<uint32_t> labels;

  std::size_t size() const { return labels.size(); }
  std::span<const double> Row(std::size_t i) const {
    return {features.data() + i * dim, dim};
  }

  bool operator==(const LabeledDataset&) const = default;
};

// Gaussian clusters. Class c is centered at +-separation on axis c mod dim
// (the sign alternates each time the axes wrap around); every coordinate gets
// spread * N(0, 1) noise. Labels are balanced and the examples shuffled.
struct ClusterConfig {
  std::size_t size = 2000;
  std::size_t dim = 4;
  uint32_t clusters = 3;
  double separation = 3.0;
  double spread = 1.0;
  uint64_t seed = 7;
};

LabeledDataset GenerateClusters(const ClusterConfig& config);

// CSV with header f0,...,f{d-1},label. Reading reports malformed cells as a
// ParseError carrying the byte offset.
std::string DatasetToCsv(const LabeledDataset& data);
LabeledDataset DatasetFromCsv(const std::string& text);
void WriteDatasetCsv(const std::string& path, const LabeledDataset& data);
LabeledDataset ReadDatasetCsv(const std::string& path);

}  // namespace bboxer

#endif  // BBOXER_DATASET_H_
