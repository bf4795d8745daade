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

#ifndef BBOXER_RETROFIT_H_
#define BBOXER_RETROFIT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bboxer/dataset.h"
#include "bboxer/modifier.h"
#include "bboxer/oracle.h"
#include "bboxer/run.h"
#include "bboxer/tensor_model.h"

namespace bboxer {

// Everything that fixes a retrofit run except the data.
struct RetrofitSetup {
  std::string algorithm = "onefifth";
  AlgorithmConfig config = AlgorithmConfig::object();
  std::shared_ptr<const TensorModel> m0;
  ModifierSpec spec;
  uint64_t budget = 100;
  uint64_t seed = 0;
};

// One decision answered by the oracle during a run.
struct RecordedComparison {
  uint64_t step = 0;
  ComparisonRequest request;
  uint32_t choice = 1;
};

struct RetrofitRun {
  RunResult result;
  TensorModel final_model;
  // Lowest training loss seen after each step.
  std::vector<double> best_loss;
  std::vector<Candidate> evaluated;
  std::vector<RecordedComparison> comparisons;
};

// The search starts at x = 0, i.e. at m0 itself.
RetrofitRun RunRetrofit(const RetrofitSetup& setup,
                        std::shared_ptr<const LabeledDataset> data, int max_threads = 1);

}  // namespace bboxer

#endif  // BBOXER_RETROFIT_H_
