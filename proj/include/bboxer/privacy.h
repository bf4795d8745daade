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

#ifndef BBOXER_PRIVACY_H_
#define BBOXER_PRIVACY_H_

#include <cstdint>
#include <optional>
#include <string>

#include "bboxer/retrofit.h"

namespace bboxer {

struct InvarianceResult {
  bool identical = false;  // same trace and bitwise the same final point
  // 1-based index of the first differing trace record.
  std::optional<uint64_t> divergent_step;
};

InvarianceResult PrivacyInvarianceTest(const RetrofitSetup& setup,
                                       std::shared_ptr<const LabeledDataset> d1,
                                       std::shared_ptr<const LabeledDataset> d2);

// Dataset changes that leave every comparison of a given clean run unchanged.
enum class PairKind {
  kPermutation,         // examples reordered; the mean loss ignores order
  kMarginPerturbation,  // one feature moved by less than every audited margin allows
  kConsensusRelabel,    // an example every evaluated model predicts alike, relabeled
};

std::string PairKindName(PairKind kind);

struct DatasetPair {
  LabeledDataset changed;
  PairKind kind = PairKind::kPermutation;
  std::size_t example = 0;
  std::string description;
};

// Builds d2 from d1 using the candidates evaluated by `clean` (a run on d1).
// Returns nullopt when no example qualifies. `seed` picks among the
// qualifying examples.
std::optional<DatasetPair> BuildPreservingPair(PairKind kind, const RetrofitSetup& setup,
                                               const LabeledDataset& d1,
                                               const RetrofitRun& clean, uint64_t seed);

// Negative control: relabels one example so that exactly the comparison at
// `predicted_step` changes first. The prediction is computed from the
// recorded comparisons of `clean` alone.
struct FlipControl {
  LabeledDataset changed;
  std::size_t example = 0;
  uint32_t new_label = 0;
  uint64_t predicted_step = 0;
};

std::optional<FlipControl> BuildFlippingPair(const RetrofitSetup& setup,
                                             const LabeledDataset& d1,
                                             const RetrofitRun& clean);

}  // namespace bboxer

#endif  // BBOXER_PRIVACY_H_
