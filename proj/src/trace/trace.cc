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

#include "bboxer/trace.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bboxer/errors.h"

namespace bboxer {

bool AllFinite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

void ValidateRecord(const ChoiceRecord& record, uint64_t step) {
  if (record.k < 1 || record.choice < 1 || record.choice > record.k) {
    throw TraceIntegrityError("record " + std::to_string(step) + ": choice " +
                              std::to_string(record.choice) +
                              " outside [1, " + std::to_string(record.k) + "]");
  }
}

double TraceBits(std::span<const ChoiceRecord> records) {
  double bits = 0.0;
  for (const ChoiceRecord& r : records) bits += std::log2(static_cast<double>(r.k));
  return bits;
}

std::optional<std::size_t> FirstDivergence(std::span<const ChoiceRecord> a,
                                           std::span<const ChoiceRecord> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  if (a.size() != b.size()) return n;
  return std::nullopt;
}

}  // namespace bboxer
