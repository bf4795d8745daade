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

#include "bboxer/modifier.h"

#include <cmath>

#include "bboxer/errors.h"

namespace bboxer {
namespace {

std::size_t SliceSize(const Matrix& m, ModifierKind kind) {
  switch (kind) {
    case ModifierKind::kFull:
      return m.rows * m.cols;
    case ModifierKind::kLowRank1:
      return m.rows + m.cols;
    case ModifierKind::kBroadcast:
      return m.cols;
  }
  return 0;
}

const Matrix& Target(const TensorModel& model, const std::string& name) {
  auto it = model.tensors.find(name);
  if (it == model.tensors.end()) {
    throw ConfigError("modifier target '" + name + "' is not a tensor of the model");
  }
  return it->second;
}

}  // namespace

ModifierKind ParseModifierKind(const std::string& name) {
  if (name == "full") return ModifierKind::kFull;
  if (name == "lowrank1") return ModifierKind::kLowRank1;
  if (name == "broadcast") return ModifierKind::kBroadcast;
  throw ConfigError("unknown modifier kind '" + name + "' (expected full, lowrank1, broadcast)");
}

std::string ModifierKindName(ModifierKind kind) {
  switch (kind) {
    case ModifierKind::kFull:
      return "full";
    case ModifierKind::kLowRank1:
      return "lowrank1";
    case ModifierKind::kBroadcast:
      return "broadcast";
  }
  return "unknown";
}

std::size_t ModifierDimension(const TensorModel& model, const ModifierSpec& spec) {
  std::size_t d = 0;
  for (const std::string& name : spec.targets) d += SliceSize(Target(model, name), spec.kind);
  return d;
}

TensorModel Modified(const TensorModel& m0, const ParamVector& x, const ModifierSpec& spec) {
  if (spec.targets.empty()) throw ConfigError("modifier has no targets");
  TensorModel model = m0;
  const double c = spec.constant;
  std::size_t offset = 0;
  for (const std::string& name : spec.targets) {
    const Matrix& original = Target(m0, name);
    const std::size_t need = SliceSize(original, spec.kind);
    if (offset + need > x.size()) {
      throw PreconditionError("x has " + std::to_string(x.size()) +
                              " entries; tensor '" + name + "' needs entries [" +
                              std::to_string(offset) + ", " +
                              std::to_string(offset + need) + ")");
    }
    Matrix& w = model.tensors[name];
    const double* slice = x.data() + offset;
    for (std::size_t r = 0; r < w.rows; ++r) {
      for (std::size_t col = 0; col < w.cols; ++col) {
        double e = 0.0;
        switch (spec.kind) {
          case ModifierKind::kFull:
            e = slice[r * w.cols + col];
            break;
          case ModifierKind::kLowRank1:
            e = slice[r] * slice[w.rows + col];
            break;
          case ModifierKind::kBroadcast:
            e = slice[col];
            break;
        }
        w.at(r, col) *= std::exp(c * e);
      }
    }
    offset += need;
  }
  if (offset != x.size()) {
    throw PreconditionError("x has " + std::to_string(x.size()) +
                            " entries; the targets end with tensor '" + spec.targets.back() +
                            "' at entry " + std::to_string(offset));
  }
  return model;
}

}  // namespace bboxer
