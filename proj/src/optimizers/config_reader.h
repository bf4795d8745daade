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

#ifndef BBOXER_SRC_OPTIMIZERS_CONFIG_READER_H_
#define BBOXER_SRC_OPTIMIZERS_CONFIG_READER_H_

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "bboxer/errors.h"
#include "bboxer/trace.h"

namespace bboxer {

// Typed access to an algorithm config. Every key must be read before Finish(),
// which rejects the leftovers.
class ConfigReader {
 public:
  ConfigReader(const AlgorithmConfig& config, std::string owner)
      : config_(config), owner_(std::move(owner)) {
    if (!config_.is_null() && !config_.is_object()) {
      throw ConfigError(owner_ + ": config must be a JSON object");
    }
  }

  double Real(const std::string& key, double fallback) {
    const AlgorithmConfig* v = Get(key);
    if (v == nullptr) return fallback;
    if (!v->is_number()) throw ConfigError(owner_ + ": '" + key + "' must be a number");
    return v->get<double>();
  }

  uint64_t Count(const std::string& key, uint64_t fallback) {
    const AlgorithmConfig* v = Get(key);
    if (v == nullptr) return fallback;
    // Configs built in code hold signed integers; parsed ones unsigned.
    if (!v->is_number_integer() || (!v->is_number_unsigned() && v->get<int64_t>() < 0)) {
      throw ConfigError(owner_ + ": '" + key + "' must be a non-negative integer");
    }
    return v->get<uint64_t>();
  }

  bool Flag(const std::string& key, bool fallback) {
    const AlgorithmConfig* v = Get(key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) throw ConfigError(owner_ + ": '" + key + "' must be true or false");
    return v->get<bool>();
  }

  std::string Text(const std::string& key, const std::string& fallback) {
    const AlgorithmConfig* v = Get(key);
    if (v == nullptr) return fallback;
    if (!v->is_string()) throw ConfigError(owner_ + ": '" + key + "' must be a string");
    return v->get<std::string>();
  }

  void Skip(const std::string& key) { seen_.insert(key); }

  void Finish() const {
    if (!config_.is_object()) return;
    for (auto it = config_.begin(); it != config_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ConfigError(owner_ + ": unknown config key '" + it.key() + "'");
      }
    }
  }

 private:
  const AlgorithmConfig* Get(const std::string& key) {
    seen_.insert(key);
    if (!config_.is_object()) return nullptr;
    auto it = config_.find(key);
    return it == config_.end() ? nullptr : &*it;
  }

  const AlgorithmConfig& config_;
  std::string owner_;
  std::set<std::string> seen_;
};

}  // namespace bboxer

#endif  // BBOXER_SRC_OPTIMIZERS_CONFIG_READER_H_
