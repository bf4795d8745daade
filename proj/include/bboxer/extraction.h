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

#ifndef BBOXER_EXTRACTION_H_
#define BBOXER_EXTRACTION_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "bboxer/retrofit.h"

namespace bboxer {

struct ExtractionReport {
  std::size_t datasets = 0;
  std::size_t distinct_outputs = 0;
  // Pairs (i, j), i < j, of datasets whose final points are bitwise equal.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  // An extractor needs the dataset -> output map to be injective.
  bool vulnerable = false;
  // log2 of the largest reachable-state count over the runs.
  double max_state_count_log2 = 0.0;
  // More datasets than reachable outputs: a collision is certain.
  bool collision_guaranteed = false;
  // A single dataset tells nothing about injectivity.
  bool degenerate = false;
};

// Runs the same (algorithm, seed, budget) on every dataset and looks for
// datasets that lead to the same output. Throws PreconditionError when two
// datasets are equal.
ExtractionReport ExtractionTest(const RetrofitSetup& setup,
                                const std::vector<std::shared_ptr<const LabeledDataset>>& datasets);

}  // namespace bboxer

#endif  // BBOXER_EXTRACTION_H_
