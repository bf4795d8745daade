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

#ifndef BBOXER_TRACE_H_
#define BBOXER_TRACE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace bboxer {

// A search point proposed by an optimizer.
using ParamVector = std::vector<double>;

bool AllFinite(std::span<const double> values);

// Algorithm configuration: a JSON object of scalar values. Keys are kept
// sorted, which makes serialized configs canonical.
using AlgorithmConfig = nlohmann::json;

// One step of the compression trace: the branching factor announced by the
// optimizer before comparing, and the 1-based outcome of the comparison.
struct ChoiceRecord {
  uint32_t k = 1;
  uint32_t choice = 1;

  bool operator==(const ChoiceRecord&) const = default;
};

// Throws TraceIntegrityError unless 1 <= choice <= k.
void ValidateRecord(const ChoiceRecord& record, uint64_t step);

// The compression bottleneck of a run. Together with the seed, the algorithm
// and the budget, `records` determines the final point.
struct Trace {
  uint64_t seed = 0;
  std::string algorithm_id;
  AlgorithmConfig algorithm_config = AlgorithmConfig::object();
  uint64_t budget = 0;
  std::string rng_id;
  std::vector<ChoiceRecord> records;
  // Step index of the recommended candidate (0 is the initial point), when the
  // recommendation is a point that was evaluated during the run.
  std::optional<uint64_t> recommendation_index;

  bool complete() const { return records.size() == budget; }

  bool operator==(const Trace&) const = default;
};

// Sum of log2(k_i).
double TraceBits(std::span<const ChoiceRecord> records);
inline double TraceBits(const Trace& trace) { return TraceBits(trace.records); }

// Index of the first differing record, or nullopt when the record sequences
// are identical.
std::optional<std::size_t> FirstDivergence(std::span<const ChoiceRecord> a,
                                           std::span<const ChoiceRecord> b);

}  // namespace bboxer

#endif  // BBOXER_TRACE_H_
