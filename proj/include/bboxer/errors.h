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

#ifndef BBOXER_ERRORS_H_
#define BBOXER_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bboxer {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (budget of zero, bad sizes...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invalid or unknown algorithm / modifier / CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The compression trace is inconsistent with the algorithm that produced or
// replays it: out-of-range choice, k mismatch, truncated record list.
class TraceIntegrityError : public Error {
 public:
  using Error::Error;
};

// A candidate point contained NaN or infinity.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace bboxer

#endif  // BBOXER_ERRORS_H_
