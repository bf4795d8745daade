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

#include "bboxer/privacy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "bboxer/errors.h"
#include "bboxer/rng.h"

namespace bboxer {
namespace {

// Lowest-index arg-max plus the gap to the runner-up (0 on ties).
struct Decision {
  uint32_t label = 0;
  double margin = 0.0;
};

Decision Decide(const std::vector<double>& logits) {
  Decision d;
  for (uint32_t c = 1; c < logits.size(); ++c) {
    if (logits[c] > logits[d.label]) d.label = c;
  }
  d.margin = std::numeric_limits<double>::infinity();
  for (uint32_t c = 0; c < logits.size(); ++c) {
    if (c != d.label) d.margin = std::min(d.margin, logits[d.label] - logits[c]);
  }
  return d;
}

// Largest change of logit[top] - logit[c], over c, per unit change of
// feature j. tanh is 1-Lipschitz, which bounds the hidden layer of mlp2.
double Sensitivity(const TensorModel& m, std::size_t j, uint32_t top) {
  const Matrix& w0 = m.tensor("layer0");
  double worst = 0.0;
  if (m.kind == "mlp2") {
    const Matrix& norm = m.tensor("norm0");
    const Matrix& w1 = m.tensor("layer1");
    for (std::size_t c = 0; c < w1.cols; ++c) {
      double s = 0.0;
      for (std::size_t h = 0; h < w1.rows; ++h) {
        s += std::abs(w0.at(j, h) * norm.data[h]) * std::abs(w1.at(h, top) - w1.at(h, c));
      }
      worst = std::max(worst, s);
    }
    return worst;
  }
  for (std::size_t c = 0; c < w0.cols; ++c) {
    worst = std::max(worst, std::abs(w0.at(j, top) - w0.at(j, c)));
  }
  return worst;
}

std::vector<TensorModel> CandidateModels(const RetrofitSetup& setup,
                                         const std::vector<Candidate>& candidates) {
  std::vector<TensorModel> models;
  models.reserve(candidates.size());
  for (const Candidate& c : candidates) models.push_back(Modified(*setup.m0, c.point, setup.spec));
  return models;
}

std::vector<std::size_t> ShuffledIndices(std::size_t n, uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng = Rng::Derive(seed, "privacy/order");
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.UniformInt(i)]);
  return order;
}

}  // namespace

std::string PairKindName(PairKind kind) {
  switch (kind) {
    case PairKind::kPermutation:
      return "permutation";
    case PairKind::kMarginPerturbation:
      return "margin-perturbation";
    case PairKind::kConsensusRelabel:
      return "consensus-relabel";
  }
  return "unknown";
}

InvarianceResult PrivacyInvarianceTest(const RetrofitSetup& setup,
                                       std::shared_ptr<const LabeledDataset> d1,
                                       std::shared_ptr<const LabeledDataset> d2) {
  const RetrofitRun a = RunRetrofit(setup, std::move(d1));
  const RetrofitRun b = RunRetrofit(setup, std::move(d2));
  InvarianceResult r;
  if (auto i = FirstDivergence(a.result.trace.records, b.result.trace.records)) {
    r.divergent_step = *i + 1;
  }
  r.identical = !r.divergent_step && a.result.trace == b.result.trace &&
                a.result.final_x == b.result.final_x;
  return r;
}

std::optional<DatasetPair> BuildPreservingPair(PairKind kind, const RetrofitSetup& setup,
                                               const LabeledDataset& d1,
                                               const RetrofitRun& clean, uint64_t seed) {
  DatasetPair pair;
  pair.kind = kind;
  pair.changed = d1;
  if (kind == PairKind::kPermutation) {
    const std::vector<std::size_t> order = ShuffledIndices(d1.size(), seed);
    for (std::size_t i = 0; i < d1.size(); ++i) {
      const std::size_t src = order[i];
      std::copy_n(d1.features.begin() + src * d1.dim, d1.dim,
                  pair.changed.features.begin() + i * d1.dim);
      pair.changed.labels[i] = d1.labels[src];
    }
    if (pair.changed == d1) return std::nullopt;
    pair.description = "examples permuted";
    return pair;
  }

  const std::vector<TensorModel> models = CandidateModels(setup, clean.evaluated);
  Rng rng = Rng::Derive(seed, "privacy/pick");
  for (std::size_t i : ShuffledIndices(d1.size(), seed)) {
    std::vector<Decision> decisions;
    decisions.reserve(models.size());
    for (const TensorModel& m : models) decisions.push_back(Decide(Logits(m, d1.Row(i))));

    if (kind == PairKind::kConsensusRelabel) {
      const bool consensus = std::all_of(decisions.begin(), decisions.end(), [&](const Decision& d) {
        return d.label == decisions.front().label;
      });
      if (!consensus || decisions.empty()) continue;
      uint32_t label = static_cast<uint32_t>(rng.UniformInt(d1.classes - 1));
      if (label >= d1.labels[i]) ++label;
      pair.changed.labels[i] = label;
      pair.example = i;
      pair.description = "example " + std::to_string(i) + " relabeled " +
                         std::to_string(d1.labels[i]) + " -> " + std::to_string(label);
      return pair;
    }

    const std::size_t j = static_cast<std::size_t>(rng.UniformInt(d1.dim));
    double limit = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < models.size(); ++m) {
      const double s = Sensitivity(models[m], j, decisions[m].label);
      if (s > 0.0) limit = std::min(limit, decisions[m].margin / s);
      if (decisions[m].margin <= 1e-9) limit = 0.0;
    }
    if (!(limit > 1e-9) || decisions.empty()) continue;
    const double step = 0.5 * std::min(limit, 1.0);
    double& cell = pair.changed.features[i * d1.dim + j];
    const double before = cell;
    cell += step;
    if (cell == before) continue;
    pair.example = i;
    pair.description = "example " + std::to_string(i) + " feature " + std::to_string(j) +
                       " moved by " + std::to_string(step);
    return pair;
  }
  return std::nullopt;
}

std::optional<FlipControl> BuildFlippingPair(const RetrofitSetup& setup,
                                             const LabeledDataset& d1,
                                             const RetrofitRun& clean) {
  std::map<CandidateKey, std::size_t> index;
  for (std::size_t c = 0; c < clean.evaluated.size(); ++c) index[clean.evaluated[c].key] = c;
  const std::vector<TensorModel> models = CandidateModels(setup, clean.evaluated);
  std::vector<uint64_t> wrong(models.size(), 0);
  for (std::size_t c = 0; c < models.size(); ++c) {
    wrong[c] = static_cast<uint64_t>(std::llround(
        EmpiricalLoss(models[c], d1) * static_cast<double>(d1.size())));
  }
  const double s = static_cast<double>(d1.size());

  for (std::size_t i = 0; i < d1.size(); ++i) {
    std::vector<uint32_t> pred(models.size());
    for (std::size_t c = 0; c < models.size(); ++c) pred[c] = Predict(models[c], d1.Row(i));
    for (uint32_t label = 0; label < d1.classes; ++label) {
      if (label == d1.labels[i]) continue;
      for (const RecordedComparison& rc : clean.comparisons) {
        std::vector<double> values;
        for (const Candidate& cand : rc.request.candidates) {
          const std::size_t c = index.at(cand.key);
          uint64_t w = wrong[c];
          if (pred[c] == d1.labels[i]) ++w;
          if (pred[c] == label) --w;
          values.push_back(static_cast<double>(w) / s);
        }
        if (DecideChoice(rc.request, values) != rc.choice) {
          FlipControl control;
          control.changed = d1;
          control.changed.labels[i] = label;
          control.example = i;
          control.new_label = label;
          control.predicted_step = rc.step;
          return control;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace bboxer
