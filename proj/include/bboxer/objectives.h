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

#ifndef BBOXER_OBJECTIVES_H_
#define BBOXER_OBJECTIVES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "bboxer/oracle.h"

namespace bboxer {

// Synthetic test functions, each with its minimum 0 at (1, ..., 1):
//   sphere         sum (x_i - 1)^2
//   rastrigin      10 d + sum (y_i^2 - 10 cos(2 pi y_i)), y = x - 1
//   ellipsoid      sum 10^(4 i / (d - 1)) (x_i - 1)^2   (condition number 1e4)
std::span<const std::string_view> ObjectiveNames();
ValueOracle::Objective MakeObjective(std::string_view name);

// Best of `budget` points x0 + N(0, I): the baseline every optimizer must beat.
double RandomSearchBest(const ValueOracle::Objective& objective, const ParamVector& x0,
                        uint64_t budget, uint64_t seed);

}  // namespace bboxer

#endif  // BBOXER_OBJECTIVES_H_
