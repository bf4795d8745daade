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

#ifndef BBOXER_MODIFIER_H_
#define BBOXER_MODIFIER_H_

#include <string>
#include <vector>

#include "bboxer/tensor_model.h"
#include "bboxer/trace.h"

namespace bboxer {

enum class ModifierKind {
  kFull,       // W * exp(c X), X shaped like W
  kLowRank1,   // W * exp(c u v^T), u of length rows then v of length cols
  kBroadcast,  // W * exp(c 1 v^T), v of length cols, same factor on every row
};

struct ModifierSpec {
  ModifierKind kind = ModifierKind::kFull;
  std::vector<std::string> targets;
  double constant = 0.01;
};

ModifierKind ParseModifierKind(const std::string& name);
std::string ModifierKindName(ModifierKind kind);

// Length of x for `spec` applied to `model`.
std::size_t ModifierDimension(const TensorModel& model, const ModifierSpec& spec);

// A modified copy of m0. x is split across the targets in order. Throws
// PreconditionError naming the tensor whose slice does not fit.
TensorModel Modified(const TensorModel& m0, const ParamVector& x, const ModifierSpec& spec);

}  // namespace bboxer

#endif  // BBOXER_MODIFIER_H_
