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

#include "bboxer/mu_lambda_es.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bboxer/combinatorics.h"
#include "bboxer/errors.h"

namespace bboxer {

uint32_t DefaultLambda(std::size_t dimension) {
  return 4 + static_cast<uint32_t>(std::floor(3.0 * std::log(static_cast<double>(dimension))));
}

DiagonalEs::DiagonalEs(const ParamVector& initial, uint64_t seed, const EsParams& params)
    : Optimizer("dcma", initial.size()),
      lambda_(params.lambda ? params.lambda : DefaultLambda(initial.size())),
      mu_(params.mu ? params.mu : std::max<uint32_t>(1, lambda_ / 2)),
      ranked_(params.ranked_weights),
      accounting_(params.accounting),
      mean_(initial),
      sigma_(params.sigma),
      diag_(initial.size(), 1.0),
      path_sigma_(initial.size(), 0.0),
      path_c_(initial.size(), 0.0),
      rng_(Rng::Derive(seed, "dcma")) {
  if (mu_ > lambda_) throw ConfigError("dcma: mu must not exceed lambda");
  if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) {
    throw ConfigError("dcma: sigma must be positive and finite");
  }
  if (accounting_ == EsAccounting::kBinary && ranked_) {
    throw ConfigError("dcma: ranked weights need subset accounting");
  }
  if (accounting_ == EsAccounting::kSubset) {
    uint64_t k = BinomialCoefficient(lambda_, mu_);
    if (ranked_) {
      const uint64_t f = Factorial(mu_);
      if (k > std::numeric_limits<uint64_t>::max() / f) {
        throw ConfigError("dcma: branching factor overflows");
      }
      k *= f;
    }
    if (k > std::numeric_limits<uint32_t>::max()) {
      throw ConfigError("dcma: branching factor " + std::to_string(k) +
                        " exceeds the 32-bit choice range");
    }
    select_cases_ = static_cast<uint32_t>(k);
  }

  weights_.assign(mu_, 1.0 / mu_);
  if (ranked_) {
    double total = 0.0;
    for (uint32_t i = 0; i < mu_; ++i) {
      weights_[i] = std::log(mu_ + 0.5) - std::log(i + 1.0);
      total += weights_[i];
    }
    for (double& w : weights_) w /= total;
  }
  const double sum_sq = std::inner_product(weights_.begin(), weights_.end(),
                                           weights_.begin(), 0.0);
  const double mu_eff = 1.0 / sum_sq;
  const double d = static_cast<double>(initial.size());
  c_sigma_ = (mu_eff + 2.0) / (d + mu_eff + 5.0);
  d_sigma_ = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (d + 1.0)) - 1.0) + c_sigma_;
  c_c_ = 4.0 / (d + 4.0);
  const double sep = (d + 2.0) / 3.0;
  c_1_ = std::min(1.0, sep * 2.0 / ((d + 1.3) * (d + 1.3) + mu_eff));
  c_mu_ = std::min(1.0 - c_1_,
                   sep * 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((d + 2.0) * (d + 2.0) + mu_eff));
  c_mu_ = std::max(0.0, c_mu_);
  chi_n_ = std::sqrt(d) * (1.0 - 1.0 / (4.0 * d) + 1.0 / (21.0 * d * d));
}

uint32_t DiagonalEs::NumCases() const {
  if (accounting_ == EsAccounting::kBinary) return pending_mean_ ? 1 : 2;
  // The slot was advanced by the last Ask.
  return slot_ == 0 ? select_cases_ : 1;
}

ParamVector DiagonalEs::Propose() {
  pending_mean_ = accounting_ == EsAccounting::kBinary && slot_ == 0;
  if (pending_mean_) {
    ++slot_;
    return mean_;
  }
  if (offspring_.empty()) {
    z_.clear();
    keys_.clear();
    beat_mean_.clear();
  }
  std::vector<double> z(dimension());
  ParamVector x(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    z[j] = rng_.Normal();
    x[j] = mean_[j] + sigma_ * std::sqrt(diag_[j]) * z[j];
  }
  if (!AllFinite(x)) return x;  // the base class redraws
  z_.push_back(std::move(z));
  offspring_.push_back(x);
  keys_.push_back(asked() + 1);
  const uint32_t generation_size =
      lambda_ + (accounting_ == EsAccounting::kBinary ? 1u : 0u);
  slot_ = (slot_ + 1) % generation_size;
  return x;
}

ComparisonRequest DiagonalEs::Request() const {
  ComparisonRequest r;
  if (accounting_ == EsAccounting::kBinary) {
    if (pending_mean_) return r;
    r.kind = CompareKind::kChildVsIncumbent;
    r.cases = 2;
    r.candidates = {{keys_.back(), offspring_.back()}, {mean_key_, mean_}};
    return r;
  }
  if (slot_ != 0) return r;
  r.kind = ranked_ ? CompareKind::kSelectRankedSubset : CompareKind::kSelectSubset;
  r.cases = select_cases_;
  r.mu = mu_;
  for (uint32_t i = 0; i < lambda_; ++i) r.candidates.push_back({keys_[i], offspring_[i]});
  return r;
}

void DiagonalEs::Update(uint32_t choice) {
  if (accounting_ == EsAccounting::kBinary) {
    if (pending_mean_) {
      mean_key_ = asked();
      return;
    }
    if (choice == outcome::kChildWins) {
      beat_mean_.push_back(static_cast<uint32_t>(offspring_.size() - 1));
    }
    if (offspring_.size() == lambda_) EndGeneration(beat_mean_);
    return;
  }
  if (slot_ != 0) return;
  uint64_t rank = choice - 1;
  std::vector<uint32_t> selected;
  if (ranked_) {
    const uint64_t f = Factorial(mu_);
    const std::vector<uint32_t> perm = UnrankPermutation(rank % f, mu_);
    const std::vector<uint32_t> sorted = UnrankSubset(rank / f, mu_);
    for (uint32_t r = 0; r < mu_; ++r) selected.push_back(sorted[perm[r]]);
  } else {
    selected = UnrankSubset(rank, mu_);
  }
  EndGeneration(selected);
}

void DiagonalEs::EndGeneration(const std::vector<uint32_t>& selected) {
  const std::size_t d = dimension();
  const std::size_t m = selected.size();
  std::vector<double> w(m);
  if (accounting_ == EsAccounting::kBinary) {
    std::fill(w.begin(), w.end(), m ? 1.0 / m : 0.0);
  } else {
    w = weights_;
  }
  double mu_eff = 0.0;
  for (double v : w) mu_eff += v * v;
  mu_eff = mu_eff > 0.0 ? 1.0 / mu_eff : 0.0;

  std::vector<double> y_w(d, 0.0), z_w(d, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<double>& z = z_[selected[i]];
    for (std::size_t j = 0; j < d; ++j) {
      z_w[j] += w[i] * z[j];
      y_w[j] += w[i] * std::sqrt(diag_[j]) * z[j];
    }
  }
  for (std::size_t j = 0; j < d; ++j) mean_[j] += sigma_ * y_w[j];

  const double cs = c_sigma_;
  const double ps_gain = std::sqrt(cs * (2.0 - cs) * mu_eff);
  double ps_norm = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    path_sigma_[j] = (1.0 - cs) * path_sigma_[j] + ps_gain * z_w[j];
    ps_norm += path_sigma_[j] * path_sigma_[j];
  }
  ps_norm = std::sqrt(ps_norm);
  ++generation_;
  const double decay = std::sqrt(1.0 - std::pow(1.0 - cs, 2.0 * generation_));
  const bool h_sigma =
      ps_norm / decay < (1.4 + 2.0 / (static_cast<double>(d) + 1.0)) * chi_n_;
  const double pc_gain = h_sigma ? std::sqrt(c_c_ * (2.0 - c_c_) * mu_eff) : 0.0;
  const double c_mu = m ? c_mu_ : 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    path_c_[j] = (1.0 - c_c_) * path_c_[j] + pc_gain * y_w[j];
    double rank_mu = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double y = std::sqrt(diag_[j]) * z_[selected[i]][j];
      rank_mu += w[i] * y * y;
    }
    const double correction = h_sigma ? 0.0 : c_c_ * (2.0 - c_c_) * diag_[j];
    diag_[j] = (1.0 - c_1_ - c_mu) * diag_[j] +
               c_1_ * (path_c_[j] * path_c_[j] + correction) + c_mu * rank_mu;
    diag_[j] = std::max(diag_[j], 1e-300);
  }
  sigma_ *= std::exp((cs / d_sigma_) * (ps_norm / chi_n_ - 1.0));

  offspring_.clear();
}

}  // namespace bboxer
