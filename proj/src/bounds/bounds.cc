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

#include "bboxer/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bboxer/errors.h"

namespace bboxer {
namespace {

void CheckEpsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw PreconditionError("epsilon must be finite and non-negative");
  }
}

void CheckSize(uint64_t s) {
  if (s == 0) throw PreconditionError("dataset size must be at least 1");
}

void CheckDelta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw PreconditionError("delta must lie in (0, 1]");
}

void CheckSigma(double sigma) {
  if (!(sigma > 0.0)) throw PreconditionError("sigma must be positive");
}

BudgetBound FloorBudget(double rhs) {
  BudgetBound out;
  out.unfloored = rhs;
  if (rhs < 0.0 || std::isnan(rhs)) return out;
  out.feasible = true;
  out.budget = static_cast<uint64_t>(std::floor(rhs));
  return out;
}

double LogDelta(uint64_t s, double epsilon, double h) {
  return std::numbers::ln2 - static_cast<double>(s) * epsilon * h;
}

}  // namespace

double LogHoeffdingDelta(uint64_t s, double epsilon) {
  CheckSize(s);
  CheckEpsilon(epsilon);
  return LogDelta(s, epsilon, 2.0 * epsilon);
}

double HoeffdingDelta(uint64_t s, double epsilon) {
  return std::exp(LogHoeffdingDelta(s, epsilon));
}

double BennettH1(double lambda) {
  if (!(lambda >= 0.0)) throw PreconditionError("h1 needs lambda >= 0");
  if (lambda < 1e-3) {
    // sum_n (-1)^(n+1) l^n / (n (n + 1)); the closed form cancels badly here.
    double term = lambda;
    double sum = 0.0;
    for (int n = 1; n <= 6; ++n) {
      sum += (n % 2 == 1 ? 1.0 : -1.0) * term / (n * (n + 1.0));
      term *= lambda;
    }
    return sum;
  }
  if (std::isinf(lambda)) return INFINITY;
  return (1.0 + 1.0 / lambda) * std::log1p(lambda) - 1.0;
}

double LogBennettDelta(uint64_t s, double epsilon, double sigma) {
  CheckSize(s);
  CheckEpsilon(epsilon);
  CheckSigma(sigma);
  return LogDelta(s, epsilon, BennettH1(epsilon / (sigma * sigma)));
}

double BennettDelta(uint64_t s, double epsilon, double sigma) {
  return std::exp(LogBennettDelta(s, epsilon, sigma));
}

BudgetBound MaxBudgetHoeffding(uint64_t s, double epsilon, double delta) {
  CheckSize(s);
  CheckEpsilon(epsilon);
  CheckDelta(delta);
  const double two_s_eps2 = 2.0 * static_cast<double>(s) * epsilon * epsilon;
  return FloorBudget((std::log(delta) + two_s_eps2) / std::numbers::ln2 - 1.0);
}

BudgetBound MaxBudgetBennett(uint64_t s, double epsilon, double sigma, double delta) {
  CheckSize(s);
  CheckEpsilon(epsilon);
  CheckSigma(sigma);
  CheckDelta(delta);
  const double h = BennettH1(epsilon / (sigma * sigma));
  return FloorBudget(static_cast<double>(s) * epsilon * h / std::numbers::ln2 +
                     std::log(delta) / std::numbers::ln2 - 1.0);
}

RiskReport OverfitRisk(double log_delta_one, double state_count_log2, uint64_t budget) {
  if (!(state_count_log2 >= 0.0)) throw PreconditionError("state count below 1");
  RiskReport r;
  r.log_delta_one = log_delta_one;
  r.state_count_log2 = state_count_log2;
  r.log_risk = state_count_log2 * std::numbers::ln2 + log_delta_one;
  r.risk = std::exp(r.log_risk);
  r.vacuous = r.log_risk > 0.0;
  r.risk_clamped = std::min(1.0, r.risk);
  r.log_uniform_risk = r.log_risk + std::log(static_cast<double>(std::max<uint64_t>(budget, 1)));
  r.uniform_risk = std::exp(r.log_uniform_risk);
  return r;
}

double ProfileLog2(std::span<const uint32_t> k) {
  double bits = 0.0;
  for (uint32_t v : k) {
    if (v < 1) throw PreconditionError("branching factors must be at least 1");
    bits += std::log2(static_cast<double>(v));
  }
  return bits;
}

double AverageBranching(double state_count_log2, uint64_t budget) {
  if (budget == 0) throw PreconditionError("average branching of an empty profile");
  return std::exp2(state_count_log2 / static_cast<double>(budget));
}

double AverageBranching(std::span<const ChoiceRecord> records) {
  return AverageBranching(TraceBits(records), records.size());
}

double StrategyStateCountLog2(std::string_view kind, uint64_t mu, uint64_t lambda,
                              uint64_t budget) {
  const double b = static_cast<double>(budget);
  const double l = static_cast<double>(lambda);
  const double m = static_cast<double>(mu);
  auto log2_binomial = [](double n, double k) {
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
           std::numbers::ln2;
  };
  if (kind == "de") return b;
  if (kind == "de_ctb") return b * std::log2(3.0);
  if (lambda == 0) throw PreconditionError("lambda must be positive");
  if (kind == "one_plus_lambda") {
    if (budget < 1) throw PreconditionError("budget must be positive");
    return (b - 1.0) / l * std::log2(l + 1.0);
  }
  if (kind == "mu_comma_lambda" || kind == "mu_plus_lambda") {
    if (mu == 0 || budget < mu) throw PreconditionError("need 1 <= mu <= budget");
    if (kind == "mu_comma_lambda" && mu > lambda) {
      throw PreconditionError("mu must not exceed lambda");
    }
    const double per_generation =
        kind == "mu_comma_lambda" ? log2_binomial(l, m) : log2_binomial(l + m, m);
    return (b - m) / l * per_generation;
  }
  throw ConfigError("unknown strategy '" + std::string(kind) +
                    "' (expected one_plus_lambda, mu_comma_lambda, mu_plus_lambda, de, de_ctb)");
}

double BetAndRunStatesLog2(std::span<const double> sub_state_counts_log2) {
  if (sub_state_counts_log2.empty()) throw PreconditionError("bet-and-run needs sub-runs");
  const double top = *std::max_element(sub_state_counts_log2.begin(), sub_state_counts_log2.end());
  double sum = 0.0;
  for (double c : sub_state_counts_log2) sum += std::exp2(c - top);
  return top + std::log2(sum);
}

double SupOverSeedsLog2(std::span<const double> per_seed_log2) {
  if (per_seed_log2.empty()) throw PreconditionError("no seeds");
  return *std::max_element(per_seed_log2.begin(), per_seed_log2.end());
}

}  // namespace bboxer
