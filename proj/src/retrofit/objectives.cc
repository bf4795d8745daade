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

#include "bboxer/objectives.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "bboxer/errors.h"
#include "bboxer/rng.h"

namespace bboxer {
namespace {

constexpr std::array<std::string_view, 3> kNames = {"sphere", "rastrigin", "ellipsoid"};

double Sphere(const ParamVector& x) {
  double s = 0.0;
  for (double v : x) s += (v - 1.0) * (v - 1.0);
  return s;
}

double Rastrigin(const ParamVector& x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) {
    const double y = v - 1.0;
    s += y * y - 10.0 * std::cos(2.0 * std::numbers::pi * y);
  }
  return s;
}

double Ellipsoid(const ParamVector& x) {
  const std::size_t d = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double w = d == 1 ? 1.0 : std::pow(1e4, static_cast<double>(i) / (d - 1));
    s += w * (x[i] - 1.0) * (x[i] - 1.0);
  }
  return s;
}

}  // namespace

std::span<const std::string_view> ObjectiveNames() { return kNames; }

ValueOracle::Objective MakeObjective(std::string_view name) {
  if (name == "sphere") return Sphere;
  if (name == "rastrigin") return Rastrigin;
  if (name == "ellipsoid") return Ellipsoid;
  throw ConfigError("unknown objective '" + std::string(name) +
                    "' (expected sphere, rastrigin, ellipsoid)");
}

double RandomSearchBest(const ValueOracle::Objective& objective, const ParamVector& x0,
                        uint64_t budget, uint64_t seed) {
  Rng rng = Rng::Derive(seed, "random-search");
  double best = std::numeric_limits<double>::infinity();
  ParamVector x(x0.size());
  for (uint64_t i = 0; i < budget; ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = x0[j] + rng.Normal();
    best = std::min(best, objective(x));
  }
  return best;
}

}  // namespace bboxer
