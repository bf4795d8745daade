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

#include "bboxer/trace_io.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "bboxer/errors.h"

namespace bboxer {
namespace {

using nlohmann::json;

const json& Field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'", 0);
  return *it;
}

uint64_t UnsignedField(const json& doc, const char* name) {
  const json& v = Field(doc, name);
  if (!v.is_number_unsigned()) {
    throw ParseError(std::string("field '") + name + "' must be a non-negative integer", 0);
  }
  return v.get<uint64_t>();
}

uint32_t Choice32(const json& v, const char* name, std::size_t index) {
  if (!v.is_number_unsigned() || v.get<uint64_t>() > UINT32_MAX) {
    throw ParseError("records[" + std::to_string(index) + "]." + name +
                         " must be an integer in [0, 2^32)", 0);
  }
  return v.get<uint32_t>();
}

}  // namespace

std::string SerializeTrace(const Trace& trace) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << kTraceSchemaVersion << ",\n";
  out << "  \"seed\": " << trace.seed << ",\n";
  out << "  \"algorithm_id\": " << json(trace.algorithm_id).dump() << ",\n";
  out << "  \"algorithm_config\": " << trace.algorithm_config.dump() << ",\n";
  out << "  \"budget\": " << trace.budget << ",\n";
  out << "  \"rng_id\": " << json(trace.rng_id).dump() << ",\n";
  out << "  \"records\": [";
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    {\"k\": " << trace.records[i].k
        << ", \"choice\": " << trace.records[i].choice << "}";
  }
  out << (trace.records.empty() ? "],\n" : "\n  ],\n");
  out << "  \"recommendation_index\": ";
  if (trace.recommendation_index) {
    out << *trace.recommendation_index;
  } else {
    out << "null";
  }
  out << ",\n";
  // Round-trip precision, so the stored bits can be checked exactly on load.
  out << "  \"bits\": " << json(TraceBits(trace)).dump() << "\n";
  out << "}\n";
  return out.str();
}

Trace DeserializeTrace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed trace JSON", e.byte);
  }
  if (!doc.is_object()) throw ParseError("trace must be a JSON object", 0);

  const uint64_t version = UnsignedField(doc, "schema_version");
  if (version != kTraceSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(version), 0);
  }
  Trace trace;
  trace.seed = UnsignedField(doc, "seed");
  const json& id = Field(doc, "algorithm_id");
  if (!id.is_string()) throw ParseError("field 'algorithm_id' must be a string", 0);
  trace.algorithm_id = id.get<std::string>();
  trace.algorithm_config = Field(doc, "algorithm_config");
  if (!trace.algorithm_config.is_object()) {
    throw ParseError("field 'algorithm_config' must be an object", 0);
  }
  trace.budget = UnsignedField(doc, "budget");
  const json& rng = Field(doc, "rng_id");
  if (!rng.is_string()) throw ParseError("field 'rng_id' must be a string", 0);
  trace.rng_id = rng.get<std::string>();

  const json& records = Field(doc, "records");
  if (!records.is_array()) throw ParseError("field 'records' must be an array", 0);
  if (records.size() > trace.budget) {
    throw TraceIntegrityError("trace has " + std::to_string(records.size()) +
                              " records but budget " + std::to_string(trace.budget));
  }
  trace.records.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const json& r = records[i];
    if (!r.is_object() || !r.contains("k") || !r.contains("choice")) {
      throw ParseError("records[" + std::to_string(i) + "] must be {k, choice}", 0);
    }
    ChoiceRecord rec{Choice32(r["k"], "k", i), Choice32(r["choice"], "choice", i)};
    ValidateRecord(rec, i + 1);
    trace.records.push_back(rec);
  }

  const json& rec_index = Field(doc, "recommendation_index");
  if (!rec_index.is_null()) {
    if (!rec_index.is_number_unsigned()) {
      throw ParseError("field 'recommendation_index' must be null or an integer", 0);
    }
    trace.recommendation_index = rec_index.get<uint64_t>();
  }

  const json& bits = Field(doc, "bits");
  if (!bits.is_number()) throw ParseError("field 'bits' must be a number", 0);
  const double expected = TraceBits(trace);
  if (std::abs(bits.get<double>() - expected) > 1e-9 * std::max(1.0, expected)) {
    throw TraceIntegrityError("stored bits do not match the records");
  }
  return trace;
}

void WriteTraceFile(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << SerializeTrace(trace);
  if (!out) throw Error("write to '" + path + "' failed");
}

Trace ReadTraceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return DeserializeTrace(buf.str());
}

std::string HashParamVector(const ParamVector& x) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : x) {
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace bboxer
