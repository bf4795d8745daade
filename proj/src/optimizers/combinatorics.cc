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

#include "bboxer/combinatorics.h"

#include <algorithm>
#include <string>

#include "bboxer/errors.h"

namespace bboxer {

uint64_t BinomialCoefficient(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) {
      throw ConfigError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") overflows 64 bits");
    }
  }
  return static_cast<uint64_t>(result);
}

uint64_t Factorial(uint64_t m) {
  unsigned __int128 result = 1;
  for (uint64_t i = 2; i <= m; ++i) {
    result *= i;
    if (result > UINT64_MAX) {
      throw ConfigError(std::to_string(m) + "! overflows 64 bits");
    }
  }
  return static_cast<uint64_t>(result);
}

uint64_t RankSubset(std::span<const uint32_t> sorted_indices) {
  uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_indices.size(); ++i) {
    rank += BinomialCoefficient(sorted_indices[i], i + 1);
  }
  return rank;
}

std::vector<uint32_t> UnrankSubset(uint64_t rank, uint32_t k) {
  std::vector<uint32_t> indices(k);
  for (uint32_t i = k; i >= 1; --i) {
    // Largest c with C(c, i) <= rank.
    uint32_t c = i - 1;
    while (BinomialCoefficient(c + 1, i) <= rank) ++c;
    indices[i - 1] = c;
    rank -= BinomialCoefficient(c, i);
  }
  return indices;
}

uint64_t RankPermutation(std::span<const uint32_t> permutation) {
  const std::size_t m = permutation.size();
  uint64_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (permutation[j] < permutation[i]) ++smaller_after;
    }
    rank = rank * (m - i) + smaller_after;
  }
  return rank;
}

std::vector<uint32_t> UnrankPermutation(uint64_t rank, uint32_t m) {
  std::vector<uint64_t> digits(m);
  for (uint32_t i = m; i >= 1; --i) {
    const uint64_t radix = m - i + 1;
    digits[i - 1] = rank % radix;
    rank /= radix;
  }
  std::vector<uint32_t> pool(m);
  for (uint32_t i = 0; i < m; ++i) pool[i] = i;
  std::vector<uint32_t> permutation;
  permutation.reserve(m);
  for (uint32_t i = 0; i < m; ++i) {
    permutation.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return permutation;
}

}  // namespace bboxer
