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

#ifndef BBOXER_REGISTRY_H_
#define BBOXER_REGISTRY_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "bboxer/optimizer.h"
#include "bboxer/trace.h"

namespace bboxer {

// Every algorithm id accepted by MakeOptimizer, in documentation order.
std::span<const std::string_view> AlgorithmIds();
bool IsKnownAlgorithm(std::string_view id);
// "onefifth, discrete, ..." for error messages.
std::string AlgorithmIdList();

// Builds a freshly initialized optimizer. Unknown ids and unknown config keys
// throw ConfigError. The optional "dim" key must match initial.size().
std::unique_ptr<Optimizer> MakeOptimizer(std::string_view id,
                                         const AlgorithmConfig& config,
                                         const ParamVector& initial,
                                         uint64_t budget, uint64_t seed);

}  // namespace bboxer

#endif  // BBOXER_REGISTRY_H_
