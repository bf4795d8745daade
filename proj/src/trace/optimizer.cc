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

#include "bboxer/optimizer.h"

#include <string>
#include <utility>

#include "bboxer/errors.h"

namespace bboxer {

std::string_view CompareKindName(CompareKind kind) {
  switch (kind) {
    case CompareKind::kNone:
      return "none";
    case CompareKind::kChildVsIncumbent:
      return "child-vs-incumbent";
    case CompareKind::kChildVsParentAndBest:
      return "child-vs-parent-and-best";
    case CompareKind::kSelectSubset:
      return "select-subset";
    case CompareKind::kSelectRankedSubset:
      return "select-ranked-subset";
    case CompareKind::kSelectBest:
      return "select-best";
  }
  return "unknown";
}

Optimizer::Optimizer(std::string id, std::size_t dimension)
    : id_(std::move(id)), dimension_(dimension) {
  if (dimension_ == 0) throw PreconditionError(id_ + ": dimension must be positive");
}

ParamVector Optimizer::Ask() {
  if (awaiting_tell_) {
    throw PreconditionError(id_ + ": Ask() called while a Tell() is pending");
  }
  ParamVector x = Propose();
  if (!AllFinite(x)) {
    x = Propose();
    if (!AllFinite(x)) {
      throw NonFiniteError(id_ + ": non-finite candidate at step " +
                           std::to_string(asked_ + 1));
    }
  }
  ++asked_;
  awaiting_tell_ = true;
  return x;
}

void Optimizer::Tell(uint32_t choice) {
  if (!awaiting_tell_) {
    throw PreconditionError(id_ + ": Tell() without a pending Ask()");
  }
  const uint32_t cases = PartCases();
  if (choice < 1 || choice > cases) {
    throw TraceIntegrityError(id_ + ": choice " + std::to_string(choice) +
                              " outside [1, " + std::to_string(cases) +
                              "] at step " + std::to_string(asked_));
  }
  Update(choice);
  ++told_;
  if (StepComplete()) awaiting_tell_ = false;
}

ParamVector Optimizer::Recommend() const {
  if (told_ == 0) throw PreconditionError(id_ + ": Recommend() before any Tell()");
  return Recommendation();
}

double Optimizer::StateCountLog2(std::span<const ChoiceRecord> records) const {
  return TraceBits(records);
}

}  // namespace bboxer
