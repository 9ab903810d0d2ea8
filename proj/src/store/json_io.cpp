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

#include "carmichael/json_io.hpp"

#include <charconv>

namespace carmichael {
namespace {

std::string u64_str(u64 v) { return std::to_string(v); }

u64 u64_from(const Json& j) {
  const auto s = j.get<std::string>();
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("'" + s + "' is not a 64-bit decimal integer");
  }
  return v;
}

Json u64_array(const std::vector<u64>& xs) {
  Json out = Json::array();
  for (u64 x : xs) out.push_back(u64_str(x));
  return out;
}

std::vector<u64> u64_vector(const Json& j) {
  std::vector<u64> out;
  for (const auto& x : j) out.push_back(u64_from(x));
  return out;
}

}  // namespace

void to_json(Json& j, const FactoredNat& v) { j = Json{{"value", v.value()}, {"factorization", v.to_string()}}; }

void from_json(const Json& j, FactoredNat& v) {
  v = parse_factorization(j.at("factorization").get<std::string>());
  if (j.contains("value") && j.at("value").get<Nat>() != v.value()) {
    throw ValidationError("factorization does not multiply out to the stored value");
  }
}

void to_json(Json& j, const FrobeniusWitness& v) {
  j = Json{{"p", v.prime}, {"r", v.degree}, {"i", nullptr}};
  if (v.exponent) j["i"] = *v.exponent;
}

void from_json(const Json& j, FrobeniusWitness& v) {
  v.prime = j.at("p").get<Nat>();
  v.degree = j.at("r").get<unsigned>();
  v.exponent.reset();
  if (!j.at("i").is_null()) v.exponent = j.at("i").get<unsigned>();
}

void to_json(Json& j, const KorseltReport& v) {
  j = Json{{"record", "korselt"},
           {"n", v.n.value()},
           {"factors", v.n.to_string()},
           {"order", v.order},
           {"squarefree", v.squarefree},
           {"composite", v.composite},
           {"verdict", to_string(v.verdict)},
           {"witnesses", v.witnesses}};
}

void from_json(const Json& j, KorseltReport& v) {
  v.n = parse_factorization(j.at("factors").get<std::string>());
  if (j.at("n").get<Nat>() != v.n.value()) throw ValidationError("korselt record: factors do not multiply out to n");
  v.order = j.at("order").get<unsigned>();
  v.squarefree = j.at("squarefree").get<bool>();
  v.composite = j.at("composite").get<bool>();
  v.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  v.witnesses = j.at("witnesses").get<std::vector<FrobeniusWitness>>();
}

void to_json(Json& j, const PrimePool& v) {
  j = Json{{"record", "pool"},
           {"order", v.order},
           {"modulus", v.modulus},
           {"count", v.primes.size()},
           {"primes", u64_array(v.primes)}};
}

void from_json(const Json& j, PrimePool& v) {
  v.order = j.at("order").get<unsigned>();
  v.modulus = j.at("modulus").get<FactoredNat>();
  v.primes = u64_vector(j.at("primes"));
}

void to_json(Json& j, const FecundityRecord& v) {
  j = Json{{"record", "fecundity"},
           {"modulus", v.modulus},
           {"pool_size", v.pool_size},
           {"phi_log2", v.phi_log2},
           {"fecundity", v.fecundity},
           {"expected_count_log2", v.expected_count_log2}};
}

void from_json(const Json& j, FecundityRecord& v) {
  v.modulus = j.at("modulus").get<FactoredNat>();
  v.pool_size = j.at("pool_size").get<std::size_t>();
  v.phi_log2 = j.at("phi_log2").get<double>();
  v.fecundity = j.at("fecundity").get<double>();
  v.expected_count_log2 = j.at("expected_count_log2").get<double>();
}

void to_json(Json& j, const SearchHit& v) {
  j = Json{{"record", "hit"}, {"subset", u64_str(v.subset)}, {"product", v.product},
           {"d", v.d_part},   {"e", v.e_part},                 {"f", v.f_part}};
}

void from_json(const Json& j, SearchHit& v) {
  v.subset = u64_from(j.at("subset"));
  v.product = j.at("product").get<Nat>();
  v.d_part = j.at("d").get<Nat>();
  v.e_part = j.at("e").get<Nat>();
  v.f_part = j.at("f").get<Nat>();
}

void to_json(Json& j, const InstanceSummary& v) {
  j = Json{{"primes", u64_array(v.primes)},
           {"modulus", u64_str(v.modulus)},
           {"target", u64_str(v.target)},
           {"block_sizes", v.block_sizes}};
}

void from_json(const Json& j, InstanceSummary& v) {
  v.primes = u64_vector(j.at("primes"));
  v.modulus = u64_from(j.at("modulus"));
  v.target = u64_from(j.at("target"));
  v.block_sizes = j.at("block_sizes").get<std::array<unsigned, 3>>();
}

void to_json(Json& j, const CensusResult& v) {
  j = Json{{"record", "census"},
           {"instance", v.instance},
           {"count", v.count},
           {"expected_log2", v.expected_log2},
           {"sweep_divisors_skipped", u64_str(v.sweep_divisors_skipped)},
           {"hits", v.hits}};
}

void from_json(const Json& j, CensusResult& v) {
  v.instance = j.at("instance").get<InstanceSummary>();
  v.count = j.at("count").get<std::size_t>();
  v.expected_log2 = j.at("expected_log2").get<double>();
  v.sweep_divisors_skipped = u64_from(j.at("sweep_divisors_skipped"));
  v.hits = j.at("hits").get<std::vector<SearchHit>>();
}

void to_json(Json& j, const NonRigidMember& v) {
  j = Json{{"record", "nonrigid"}, {"n", v.n},   {"n0", v.n0}, {"p0", u64_str(v.p0)},
           {"factors", v.factors.to_string()}, {"rigid", false}};
}

void from_json(const Json& j, NonRigidMember& v) {
  v.n = j.at("n").get<Nat>();
  v.n0 = j.at("n0").get<Nat>();
  v.p0 = u64_from(j.at("p0"));
  v.factors = parse_factorization(j.at("factors").get<std::string>());
  if (v.factors.value() != v.n) throw ValidationError("non-rigid record: factors do not multiply out to n");
}

void to_json(Json& j, const OracleVerdict& v) {
  j = Json{{"record", "oracle"},
           {"ring", to_string(v.ring)},
           {"subject", v.subject()},
           {"modulus", v.modulus},
           {"poly", v.poly},
           {"exponent", v.exponent},
           {"seed", u64_str(v.seed)},
           {"trials", v.trials},
           {"failures", v.failures},
           {"orbit_checked", v.orbit_checked},
           {"verdict", to_string(v.verdict)},
           {"witness", nullptr}};
  if (v.witness) j["witness"] = Json{{"x", v.witness->x}, {"y", v.witness->y}};
}

void from_json(const Json& j, OracleVerdict& v) {
  v.ring = ring_kind_from_string(j.at("ring").get<std::string>());
  v.modulus = j.at("modulus").get<Nat>();
  v.poly = j.at("poly").get<Poly>();
  v.exponent = j.at("exponent").get<Nat>();
  v.seed = u64_from(j.at("seed"));
  v.trials = j.at("trials").get<std::size_t>();
  v.failures = j.at("failures").get<std::size_t>();
  v.orbit_checked = j.at("orbit_checked").get<bool>();
  v.verdict = oracle_outcome_from_string(j.at("verdict").get<std::string>());
  v.witness.reset();
  if (!j.at("witness").is_null()) {
    v.witness = OracleWitness{j.at("witness").at("x").get<Poly>(), j.at("witness").at("y").get<Poly>()};
  }
}

}  // namespace carmichael
