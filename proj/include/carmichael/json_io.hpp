// Copyright 2026 The Carmichael Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings of the toolkit's records. Integers that can exceed 2^53
// (values, primes, moduli, masks, seeds) are written as decimal strings; every
// encoding parses back to an equal object.

#pragma once

#include <string>

#include <json.hpp>

#include "carmichael/arith.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/mitm.hpp"
#include "carmichael/nonrigid.hpp"
#include "carmichael/oracle.hpp"
#include "carmichael/pool.hpp"

namespace nlohmann {

template <>
struct adl_serializer<carmichael::Nat> {
  static void to_json(json& j, const carmichael::Nat& v) { j = v.get_str(); }
  static void from_json(const json& j, carmichael::Nat& v) { v = carmichael::parse_nat(j.get<std::string>()); }
};

}  // namespace nlohmann

namespace carmichael {

using Json = nlohmann::json;

void to_json(Json& j, const FactoredNat& v);
void from_json(const Json& j, FactoredNat& v);

void to_json(Json& j, const FrobeniusWitness& v);
void from_json(const Json& j, FrobeniusWitness& v);
void to_json(Json& j, const KorseltReport& v);
void from_json(const Json& j, KorseltReport& v);

void to_json(Json& j, const PrimePool& v);
void from_json(const Json& j, PrimePool& v);
void to_json(Json& j, const FecundityRecord& v);
void from_json(const Json& j, FecundityRecord& v);

void to_json(Json& j, const SearchHit& v);
void from_json(const Json& j, SearchHit& v);
void to_json(Json& j, const InstanceSummary& v);
void from_json(const Json& j, InstanceSummary& v);
void to_json(Json& j, const CensusResult& v);
void from_json(const Json& j, CensusResult& v);

void to_json(Json& j, const NonRigidMember& v);
void from_json(const Json& j, NonRigidMember& v);

void to_json(Json& j, const OracleVerdict& v);
void from_json(const Json& j, OracleVerdict& v);

/// One compact line, no trailing newline.
template <typename T>
std::string to_json_line(const T& value) {
  return Json(value).dump();
}

template <typename T>
T from_json_line(const std::string& line) {
  try {
    return Json::parse(line).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed record: ") + e.what());
  }
}

}  // namespace carmichael
