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

#ifndef BBOXER_ORACLE_H_
#define BBOXER_ORACLE_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bboxer/optimizer.h"

namespace bboxer {

// Answers the comparisons of a run. Only the choice integer flows back to the
// optimizer.
class ComparisonOracle {
 public:
  virtual ~ComparisonOracle() = default;
  virtual uint32_t Compare(const ComparisonRequest& request) = 0;
};

// Pure decision rule: maps the values of `request.candidates` (lower is
// better) to a choice. Shared by every value-based oracle and by audits that
// recompute outcomes from recorded values.
uint32_t DecideChoice(const ComparisonRequest& request,
                      std::span<const double> values);

// Oracle backed by an objective function, evaluated once per candidate key.
// Missing values of one request may be computed on up to `max_threads`
// threads; results are merged by candidate index before deciding.
class ValueOracle : public ComparisonOracle {
 public:
  using Objective = std::function<double(const ParamVector&)>;

  explicit ValueOracle(Objective objective, int max_threads = 1);

  uint32_t Compare(const ComparisonRequest& request) override;

  // Value of a key already evaluated by this oracle.
  std::optional<double> Lookup(CandidateKey key) const;

  // Lowest value evaluated so far (+inf before any evaluation).
  double best_value() const { return best_value_; }
  std::size_t evaluations() const { return evaluations_; }

  // Evaluates (or looks up) a single candidate.
  double Value(const Candidate& candidate);

  // Every candidate evaluated so far, in key order.
  std::vector<Candidate> EvaluatedCandidates() const;

 private:
  struct Entry {
    ParamVector point;
    double value;
  };

  Objective objective_;
  int max_threads_;
  std::map<CandidateKey, Entry> memo_;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::size_t evaluations_ = 0;
};

}  // namespace bboxer

#endif  // BBOXER_ORACLE_H_
