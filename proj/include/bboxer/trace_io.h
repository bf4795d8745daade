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

#ifndef BBOXER_TRACE_IO_H_
#define BBOXER_TRACE_IO_H_

#include <string>
#include <string_view>

#include "bboxer/trace.h"

namespace bboxer {

inline constexpr int kTraceSchemaVersion = 1;

// Canonical JSON text of a trace: fields in schema order, one record per line.
std::string SerializeTrace(const Trace& trace);

// Parses and validates a trace. Syntax errors throw ParseError with the byte
// offset; schema violations throw ParseError at offset 0 of the field's
// document; a record with choice > k throws TraceIntegrityError.
Trace DeserializeTrace(std::string_view text);

void WriteTraceFile(const std::string& path, const Trace& trace);
Trace ReadTraceFile(const std::string& path);

// FNV-1a 64 over the IEEE-754 bytes of x, as 16 hex digits.
std::string HashParamVector(const ParamVector& x);

}  // namespace bboxer

#endif  // BBOXER_TRACE_IO_H_
