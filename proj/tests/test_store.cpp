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


#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "carmichael/arith.hpp"
#include "carmichael/checkpoint.hpp"
#include "carmichael/errors.hpp"
#include "carmichael/fixtures.hpp"
#include "carmichael/json_io.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/mitm.hpp"
#include "carmichael/oracle.hpp"
#include "carmichael/pool.hpp"
#include "carmichael/reproduce.hpp"
#include "carmichael/run_log.hpp"

using namespace carmichael;

namespace {

template <typename T>
void round_trip(const T& value) {
  const std::string line = to_json_line(value);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(from_json_line<T>(line) == value);
}

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("carmichael_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("fixtures are internally consistent") {
  const auto& fx = fixtures();
  CHECK(fx.l1.to_string() == "2^7*3^3*5^2*7*11*13*17*19*29");
  CHECK(fx.l2.value() == fx.l1.value() * 31);
  CHECK(fx.numbers().size() == 9);
  for (const Fixture* n : fx.numbers()) {
    CHECK(n->factors.value() == n->value);
    CHECK(n->factors.squarefree());
  }
  CHECK(fx.l1_minimal[0].factors.distinct_primes() == 15);
  CHECK(fx.l1_minimal[1].factors.distinct_primes() == 15);
  CHECK(fx.nonrigid_smallest.value < fx.nonrigid_largest.value);
  CHECK_THROWS_AS(make_fixture("bad", "562", "3*11*17"), ValidationError);
  CHECK(make_fixture("ok", "561", "3*11*17").value == 561);
}

TEST_CASE("records round-trip as single JSON lines") {
  const auto& fx = fixtures();
  round_trip(fx.l2);
  round_trip(check_order(fx.pinch.factors, 2));
  round_trip(check_order(factor(Nat(561)), 2));
  round_trip(prime_pool(2, fx.l1));
  round_trip(fecundity(fx.l1, 2));

  const CensusResult census = census_rigid(1, factor(Nat(120)), PartitionStrategy{});
  REQUIRE_FALSE(census.hits.empty());
  round_trip(census.hits.front());
  round_trip(census.instance);
  round_trip(census);

  NonRigidMember member{fx.nonrigid_smallest.value, fx.nonrigid_smallest.value / 1153, 1153,
                        fx.nonrigid_smallest.factors};
  round_trip(member);

  round_trip(endo_probe_field(make_field(11, 2), 561, 20, 3));
  round_trip(endo_probe_quotient(make_quotient_ring(561, {Nat(0), Nat(0), Nat(1)}), 561, 20, 3));
}

TEST_CASE("large integers are decimal strings") {
  const Json j = fixtures().pinch.value;
  CHECK(j.is_string());
  const Json report = check_order(factor(Nat(561)), 1);
  CHECK(report["n"] == "561");
  CHECK(report["verdict"] == "RigidCarmichaelOfOrder");
  CHECK(report["factors"] == "3*11*17");
  const Json pool = prime_pool(1, factor(Nat(120)));
  CHECK(pool["primes"][0] == "7");
  CHECK_THROWS_AS(from_json_line<PrimePool>("{\"record\": \"pool\""), ValidationError);
  CHECK_THROWS_AS(from_json_line<FactoredNat>(R"({"value": "12", "factorization": "2^2*3^2"})"), ValidationError);
}

TEST_CASE("run log appends and skips torn lines") {
  const auto path = scratch("runs.jsonl");
  RunRecord a;
  a.command = "search";
  a.parameters = {{"order", "2"}, {"modulus", "2^7*3^3"}};
  a.started = utc_timestamp();
  a.finished = utc_timestamp();
  a.summary = Json{{"count", 246}};
  a.version = toolkit_version();
  append_run_record(path, a);
  {
    std::ofstream torn(path, std::ios::app);
    torn << "{\"command\": \"pool\", \"param";
  }
  RunRecord b = a;
  b.command = "pool";
  append_run_record(path, b);
  const auto log = read_run_log(path);
  REQUIRE(log.size() == 2);
  CHECK(log[0] == a);
  CHECK(log[1] == b);
  CHECK(a.started.size() == 20);
  CHECK(a.started.back() == 'Z');
  CHECK(utc_timestamp(std::chrono::system_clock::time_point{}) == "1970-01-01T00:00:00Z");
  CHECK_FALSE(toolkit_version().empty());
  std::filesystem::remove(path);
}

TEST_CASE("sweep checkpoints") {
  const auto path = scratch("sweep.ckpt");
  {
    SweepCheckpoint c(path, "digest-a", 8);
    CHECK(c.completed_count() == 0);
    const std::vector<std::uint64_t> hits{5, 9};
    c.record(2, hits);
    c.record(5, {});
  }
  {
    std::ofstream torn(path, std::ios::app);
    torn << "{\"block\":7,\"hits\":[1";
  }
  {
    SweepCheckpoint c(path, "digest-a", 8);
    CHECK(c.completed_count() == 2);
    CHECK(c.completed(2));
    CHECK(c.completed(5));
    CHECK_FALSE(c.completed(7));
    CHECK(c.restored_hits() == std::vector<std::uint64_t>{5, 9});
    c.record(7, std::vector<std::uint64_t>{11});
  }
  {
    SweepCheckpoint c(path, "digest-a", 8);
    CHECK(c.completed(7));
    CHECK(c.restored_hits().size() == 3);
  }
  CHECK_THROWS_AS(SweepCheckpoint(path, "digest-b", 8), ValidationError);
  CHECK_THROWS_AS(SweepCheckpoint(path, "digest-a", 16), ValidationError);
  std::filesystem::remove(path);
}

TEST_CASE("reproduce targets") {
  CHECK(reproduce_targets().size() == 9);
  CHECK_THROWS_AS(reproduce("no-such-target"), ValidationError);
  for (const auto& t : reproduce_targets()) {
    if (t.long_running) CHECK_THROWS_AS(reproduce(t.name), BudgetError);
  }
  const ReproduceOutcome pool = reproduce(reproduce_targets().front().name);
  CHECK(pool.passed);
  const Json j = pool;
  CHECK(j["status"] == "PASS");
}
