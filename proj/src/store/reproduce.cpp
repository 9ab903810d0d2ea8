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

#include "carmichael/reproduce.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

#include "carmichael/fixtures.hpp"
#include "carmichael/mitm.hpp"
#include "carmichael/nonrigid.hpp"
#include "carmichael/pool.hpp"

namespace carmichael {

const std::vector<ReproduceTarget>& reproduce_targets() {
  static const std::vector<ReproduceTarget> targets{
      {"pool-L1-45", false},  {"pool-L2-58", false},          {"fecundity-L1", false},
      {"fecundity-L2", false}, {"census-L1-246", false},      {"minimal-elements-L1", false},
      {"fourfold-L2", false},  {"nonrigid-53", true},         {"smallest-p0-1153", false},
  };
  return targets;
}

namespace {

Json decimal_list(const std::vector<Nat>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::vector<Nat> fewest_prime_hits(const CensusResult& c) {
  std::vector<const SearchHit*> hits;
  for (const auto& h : c.hits) hits.push_back(&h);
  std::stable_sort(hits.begin(), hits.end(), [](const SearchHit* a, const SearchHit* b) {
    return std::popcount(a->subset) < std::popcount(b->subset);
  });
  std::vector<Nat> out;
  if (hits.empty()) return out;
  const int least = std::popcount(hits.front()->subset);
  for (const auto* h : hits) {
    if (std::popcount(h->subset) == least) out.push_back(h->product);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void run(ReproduceOutcome& out, std::string_view target, const ReproduceOptions& options) {
  const FixtureSet& fx = fixtures();
  SearchOptions search;
  search.threads = std::max(1u, options.threads);

  if (target == "pool-L1-45" || target == "pool-L2-58") {
    const bool first = target == "pool-L1-45";
    const auto pool = prime_pool(2, first ? fx.l1 : fx.l2);
    out.observed = pool.primes.size();
    out.expected = first ? fx.pool_l1 : fx.pool_l2;
    out.passed = out.observed == out.expected;
  } else if (target == "fecundity-L1" || target == "fecundity-L2") {
    const bool first = target == "fecundity-L1";
    const double f = fecundity(first ? fx.l1 : fx.l2, 2).fecundity;
    const double want = first ? fx.fecundity_l1 : fx.fecundity_l2;
    out.observed = f;
    out.expected = want;
    out.passed = std::abs(f - want) <= 1e-3;
  } else if (target == "census-L1-246") {
    PartitionStrategy sorted;
    PartitionStrategy balanced{PartitionKind::Balanced, std::nullopt, 20};
    const auto a = census_rigid(2, fx.l1, sorted, search);
    const auto b = census_rigid(2, fx.l1, balanced, search);
    std::vector<Nat> pa, pb;
    for (const auto& h : a.hits) pa.push_back(h.product);
    for (const auto& h : b.hits) pb.push_back(h.product);
    out.observed = Json{{"count", a.count}, {"count_balanced", b.count}, {"identical", pa == pb}};
    out.expected = Json{{"count", fx.census_l1}};
    out.passed = a.count == fx.census_l1 && pa == pb;
  } else if (target == "minimal-elements-L1") {
    const auto c = census_rigid(2, fx.l1, PartitionStrategy{}, search);
    std::vector<Nat> want{fx.l1_minimal[0].value, fx.l1_minimal[1].value};
    std::sort(want.begin(), want.end());
    const auto got = fewest_prime_hits(c);
    out.observed = decimal_list(got);
    out.expected = decimal_list(want);
    out.passed = got == want;
  } else if (target == "fourfold-L2") {
    PartitionStrategy s{PartitionKind::SortedPrefix, std::array<unsigned, 3>{20, 20, 18}, 20};
    const auto probes = single_block_probe(2, fx.l2, s, search);
    std::vector<Nat> got;
    std::size_t with_hits = 0;
    for (const auto& p : probes) {
      if (p.hit_count > 0) ++with_hits;
      for (const auto& h : p.hits) got.push_back(h.product);
    }
    std::sort(got.begin(), got.end());
    std::vector<Nat> want;
    for (const auto& f : fx.l2_single_divisor) want.push_back(f.value);
    std::sort(want.begin(), want.end());
    out.observed = Json{{"sweep_primes_with_hits", with_hits}, {"numbers", decimal_list(got)}};
    out.expected = Json{{"sweep_primes_with_hits", 4}, {"numbers", decimal_list(want)}};
    out.passed = with_hits == 4 && got == want;
  } else if (target == "smallest-p0-1153") {
    const u64 p0 = smallest_valid_p0(fx.l2);
    out.observed = p0;
    out.expected = fx.nonrigid_p0;
    out.passed = p0 == fx.nonrigid_p0;
  } else if (target == "nonrigid-53") {
    const auto inst = validate_nonrigid(fx.l2, nat_from_u64(fx.nonrigid_p0));
    const auto c = search_nonrigid(inst, PartitionStrategy{PartitionKind::Qr5Filtered, std::nullopt, 20}, search);
    const bool ends = !c.members.empty() && c.members.front().n == fx.nonrigid_smallest.value &&
                      c.members.back().n == fx.nonrigid_largest.value;
    out.observed = Json{{"count", c.members.size()}, {"expected_log2", c.expected_log2}, {"extremes_match", ends}};
    out.expected = Json{{"count", fx.nonrigid_count}};
    out.passed = c.members.size() == fx.nonrigid_count && ends;
  }
}

}  // namespace

ReproduceOutcome reproduce(std::string_view target, const ReproduceOptions& options) {
  const auto& targets = reproduce_targets();
  const auto it = std::find_if(targets.begin(), targets.end(), [&](const auto& t) { return t.name == target; });
  if (it == targets.end()) throw ValidationError("unknown reproduce target '" + std::string(target) + "'");
  if (it->long_running && !options.allow_long) {
    throw BudgetError("target " + it->name + " is long-running; pass --allow-long");
  }
  ReproduceOutcome out;
  out.target = it->name;
  const auto start = std::chrono::steady_clock::now();
  run(out, target, options);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void to_json(Json& j, const ReproduceOutcome& v) {
  j = Json{{"record", "reproduce"},  {"target", v.target},     {"status", v.passed ? "PASS" : "FAIL"},
           {"observed", v.observed}, {"expected", v.expected}, {"seconds", v.seconds}};
}

}  // namespace carmichael
