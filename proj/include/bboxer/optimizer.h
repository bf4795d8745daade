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

#ifndef BBOXER_OPTIMIZER_H_
#define BBOXER_OPTIMIZER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bboxer/trace.h"

namespace bboxer {

// Identifies a candidate for the comparison oracle's memo. Key i > 0 is the
// point returned by the i-th Ask(); key 0 is the initial point. Points that
// were never asked (a distribution mean, say) use keys from the detached range.
using CandidateKey = uint64_t;
inline constexpr CandidateKey kInitialKey = 0;
inline constexpr CandidateKey kDetachedKeyBase = uint64_t{1} << 62;

struct Candidate {
  CandidateKey key = kInitialKey;
  ParamVector point;
};

// The shape of a comparison. Lower objective is better everywhere; ties go to
// the newer candidate.
enum class CompareKind {
  // No data-dependent decision; k = 1.
  kNone,
  // candidates = [child, incumbent]. 1: incumbent kept, 2: child wins.
  kChildVsIncumbent,
  // candidates = [child, parent, best]. 1: worse than parent,
  // 2: at least as good as parent but worse than best, 3: new best.
  kChildVsParentAndBest,
  // candidates = offspring. Choice - 1 is the colexicographic rank of the
  // index set of the `mu` best offspring.
  kSelectSubset,
  // As kSelectSubset, times mu!: the order of the selected offspring is part
  // of the outcome (subset_rank * mu! + permutation_rank).
  kSelectRankedSubset,
  // candidates = alternatives. Choice - 1 is the index of the best one.
  kSelectBest,
};

std::string_view CompareKindName(CompareKind kind);

struct ComparisonRequest {
  CompareKind kind = CompareKind::kNone;
  // Number of possible outcomes of this decision.
  uint32_t cases = 1;
  std::vector<Candidate> candidates;
  // Selection size for the subset kinds.
  uint32_t mu = 0;
};

namespace outcome {
inline constexpr uint32_t kIncumbentKept = 1;
inline constexpr uint32_t kChildWins = 2;

inline constexpr uint32_t kWorseThanParent = 1;
inline constexpr uint32_t kBetterThanParent = 2;
inline constexpr uint32_t kNewBest = 3;
}  // namespace outcome

// Ask/tell optimizer. One step is Ask(), NumCases(), then one or more
// Request()/Tell() rounds until StepComplete(). Tell() is the only call that
// feeds data-dependent information back; it receives a choice integer and
// nothing else, so an optimizer cannot observe objective values.
//
// A step with several rounds is a compound decision (bet-and-run folds the
// winner selection into its last racing step); its trace record holds the
// mixed-radix combination of the round choices and NumCases() announces the
// product of the round sizes.
class Optimizer {
 public:
  Optimizer(std::string id, std::size_t dimension);
  virtual ~Optimizer() = default;

  virtual std::unique_ptr<Optimizer> Clone() const = 0;

  const std::string& id() const { return id_; }
  std::size_t dimension() const { return dimension_; }
  // Number of Ask() calls so far; also the key of the latest candidate.
  uint64_t asked() const { return asked_; }
  uint64_t told() const { return told_; }

  // Proposes the next candidate. A non-finite proposal is drawn again once;
  // a second failure throws NonFiniteError.
  ParamVector Ask();

  // Branching factor k of the pending step, announced before comparing.
  virtual uint32_t NumCases() const = 0;

  // The decision the comparison oracle must take next.
  virtual ComparisonRequest Request() const = 0;

  // Feeds the oracle's answer, 1 <= choice <= Request().cases.
  void Tell(uint32_t choice);

  virtual bool StepComplete() const { return true; }

  // The point the run would return now. Throws PreconditionError before the
  // first Tell().
  ParamVector Recommend() const;

  // Key of the recommended point when it is an evaluated candidate.
  virtual std::optional<CandidateKey> RecommendationKey() const {
    return std::nullopt;
  }

  // log2 of the bound on the number of reachable internal states after
  // `records`. Defaults to sum(log2 k_i); composites override it.
  virtual double StateCountLog2(std::span<const ChoiceRecord> records) const;

 protected:
  Optimizer(const Optimizer&) = default;
  Optimizer& operator=(const Optimizer&) = default;

  virtual ParamVector Propose() = 0;
  virtual void Update(uint32_t choice) = 0;
  virtual ParamVector Recommendation() const = 0;
  // Outcome count of the pending round; equals NumCases() for simple steps.
  virtual uint32_t PartCases() const { return NumCases(); }

 private:
  std::string id_;
  std::size_t dimension_;
  uint64_t asked_ = 0;
  uint64_t told_ = 0;
  bool awaiting_tell_ = false;
};

}  // namespace bboxer

#endif  // BBOXER_OPTIMIZER_H_
