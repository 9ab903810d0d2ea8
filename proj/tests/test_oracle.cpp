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

#include <future>
#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/errors.hpp"
#include "carmichael/fixtures.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/oracle.hpp"

using namespace carmichael;

namespace {

Poly poly(std::initializer_list<long> coeffs) {
  Poly p;
  for (long c : coeffs) p.emplace_back(c);
  return p;
}

FactoredNat f(u64 n) { return factor(nat_from_u64(n)); }

}  // namespace

TEST_CASE("field construction") {
  const FiniteField prime_field = make_field(7, 1);
  CHECK(prime_field.modulus_poly == poly({0, 1}));
  CHECK(prime_field.size() == 7);
  CHECK(make_field(2, 2).modulus_poly == poly({1, 1, 1}));

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const FiniteField f9 = make_field(3, 2, seed);
    REQUIRE(f9.modulus_poly.size() == 3);
    CHECK(f9.modulus_poly[2] == 1);
    for (int x = 0; x < 3; ++x) {
      const Nat value = f9.modulus_poly[0] + f9.modulus_poly[1] * x + x * x;
      CHECK(Nat(value % 3) != 0);
    }
  }
  CHECK(is_irreducible(poly({1, 1, 1}), 2));
  CHECK_FALSE(is_irreducible(poly({1, 0, 1}), 2));     // (x + 1)^2
  CHECK(is_irreducible(poly({1, 1, 0, 1}), 2));        // x^3 + x + 1
  CHECK_FALSE(is_irreducible(poly({1, 0, 0, 0, 1}), 3));  // x^4 + 1 = (x^2+x+2)(x^2+2x+2)
  CHECK(make_field(17, 2).size() == 289);
  CHECK(is_irreducible(make_field(1153, 3, 9).modulus_poly, 1153));
}

TEST_CASE("field probes") {
  const FiniteField f121 = make_field(11, 2);
  const OracleVerdict refuted = endo_probe_field(f121, 561, 50, 1);
  CHECK(refuted.verdict == OracleOutcome::RefutedWithWitness);
  REQUIRE(refuted.witness.has_value());
  CHECK(recheck_witness(refuted));
  CHECK(refuted.ring == RingKind::FiniteField);

  CHECK(endo_probe_field(make_field(3, 2), 561, 50, 1).verdict == OracleOutcome::ConsistentWithEndomorphism);
  for (u64 p : {3u, 11u, 17u}) {
    CHECK(endo_probe_field(make_field(p, 1), 561, 20, p).verdict == OracleOutcome::ConsistentWithEndomorphism);
  }
  const Nat& pinch = fixtures().pinch.value;
  const OracleVerdict ok = endo_probe_field(make_field(17, 2), pinch, 50, 1);
  CHECK(ok.verdict == OracleOutcome::ConsistentWithEndomorphism);
  CHECK(ok.orbit_checked);
  CHECK_FALSE(ok.witness.has_value());
  CHECK_FALSE(recheck_witness(ok));
  CHECK_THROWS_AS(endo_probe_field(make_field(5, 1), 561, 10, 1), DomainError);
}

TEST_CASE("quotient ring probes") {
  const Nat& pinch = fixtures().pinch.value;
  CHECK(endo_probe_quotient(make_quotient_ring(pinch, poly({0, 0, 1})), pinch, 50, 1).verdict ==
        OracleOutcome::ConsistentWithEndomorphism);
  // In (Z/561)[x]/(x^2), (a + bx)^561 = a^561, which is additive for any
  // order-1 Carmichael number: this ring cannot separate order 1 from order 2.
  CHECK(endo_probe_quotient(make_quotient_ring(561, poly({0, 0, 1})), 561, 200, 1).verdict ==
        OracleOutcome::ConsistentWithEndomorphism);
  // x^2 - 11 is inert mod 11, so this ring contains F_121 and sees the failure at (11, 2).
  const OracleVerdict v = endo_probe_quotient(make_quotient_ring(561, poly({561 - 11, 0, 1})), 561, 200, 1);
  CHECK(v.verdict == OracleOutcome::RefutedWithWitness);
  CHECK(recheck_witness(v));

  // Degree-1 rings reduce to Z/nZ.
  CHECK(endo_probe_quotient(make_quotient_ring(561, poly({5, 1})), 561, 100, 1).verdict ==
        OracleOutcome::ConsistentWithEndomorphism);
  CHECK(endo_probe_quotient(make_quotient_ring(13, poly({5, 1})), 13, 100, 1).verdict ==
        OracleOutcome::ConsistentWithEndomorphism);
  CHECK(endo_probe_quotient(make_quotient_ring(15, poly({5, 1})), 15, 100, 1).verdict ==
        OracleOutcome::RefutedWithWitness);

  CHECK_THROWS_AS(make_quotient_ring(1, poly({0, 1})), ValidationError);
  CHECK_THROWS_AS(make_quotient_ring(15, poly({1, 2})), ValidationError);
  CHECK_THROWS_AS(make_quotient_ring(15, poly({1})), ValidationError);
  const QuotientRing r = random_quotient_ring(561, 3, 4);
  CHECK(r.f.size() == 4);
  CHECK(r.f.back() == 1);
  CHECK(random_quotient_ring(561, 3, 4).f == r.f);
}

TEST_CASE("exhaustive order-1 search") {
  CHECK(exhaustive_order1(500).empty());
  CHECK(exhaustive_order1(600) == std::vector<u64>{561});
  CHECK(exhaustive_order1(2000) == std::vector<u64>{561, 1105, 1729});
  CHECK_THROWS_AS(exhaustive_order1(200'000), DomainError);

  const auto all = exhaustive_order1(100'000);
  std::vector<u64> korselt;
  for (u64 n = 2; n <= 100'000; ++n) {
    if (check_order(f(n), 1).carmichael()) korselt.push_back(n);
  }
  CHECK(all == korselt);
}

TEST_CASE("binomial lemma") {
  CHECK(binomial_lemma_check(f(561), 1));
  CHECK(binomial_lemma_check(fixtures().pinch.factors, 2));
  CHECK_FALSE(binomial_lemma_check(f(6), 2));
  CHECK_FALSE(binomial_lemma_check(f(561), 3));  // C(561, 3) = 187 (mod 561)
  for (const Fixture* fx : fixtures().numbers()) CHECK(binomial_lemma_check(fx->factors, 2));
}

TEST_CASE("probes agree with the criterion on small numbers") {
  AgreementOptions quick;
  quick.field_trials = 20;
  quick.quotient_trials = 20;
  quick.quotient_rings = 3;
  for (u64 n = 2; n < 700; ++n) {
    for (unsigned m = 1; m <= 2; ++m) {
      const AgreementReport r = oracle_agreement(f(n), m, quick);
      INFO("n = ", n, ", m = ", m);
      CHECK(r.agrees());
    }
  }
  const AgreementReport r561 = oracle_agreement(f(561), 2, quick);
  CHECK(r561.korselt == Verdict::NotCarmichael);
  CHECK_FALSE(r561.probes_consistent);
}

TEST_CASE("probes agree with the criterion on every reference number") {
  AgreementOptions opts;
  opts.field_trials = 30;
  opts.quotient_trials = 30;
  opts.quotient_rings = 4;
  std::vector<std::future<AgreementReport>> jobs;
  for (const Fixture* fx : fixtures().numbers()) {
    for (unsigned m = 1; m <= 2; ++m) {
      jobs.push_back(std::async(std::launch::async, [fx, m, opts] { return oracle_agreement(fx->factors, m, opts); }));
    }
  }
  for (auto& j : jobs) {
    const AgreementReport r = j.get();
    INFO("n = ", r.n.value().get_str(), ", m = ", r.order);
    CHECK(r.agrees());
    CHECK(r.probes_consistent);
  }
}

TEST_CASE("outcome names round-trip") {
  for (auto o : {OracleOutcome::ConsistentWithEndomorphism, OracleOutcome::RefutedWithWitness}) {
    CHECK(oracle_outcome_from_string(to_string(o)) == o);
  }
  for (auto k : {RingKind::FiniteField, RingKind::QuotientRing}) CHECK(ring_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(ring_kind_from_string("torus"), ValidationError);
}
