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

#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/errors.hpp"
#include "carmichael/fixtures.hpp"
#include "carmichael/korselt.hpp"

using namespace carmichael;

namespace {

const FactoredNat& pinch() { return fixtures().pinch.factors; }

FactoredNat f(u64 n) { return factor(nat_from_u64(n)); }

}  // namespace

TEST_CASE("frobenius exponent") {
  CHECK(frobenius_exponent(561, 3, 2) == std::optional<unsigned>(0));
  CHECK_FALSE(frobenius_exponent(561, 11, 2).has_value());
  CHECK(frobenius_exponent(561, 2, 1) == std::optional<unsigned>(0));
  CHECK(frobenius_exponent(1153 + 5 * (1153 * 1153 - 1), 1153, 2) == std::optional<unsigned>(1));
  for (u64 p : {3u, 5u, 7u, 13u}) {
    for (u64 k = 0; k < 20; ++k) CHECK(frobenius_exponent(nat_from_u64(k * (p - 1) + 1), nat_from_u64(p), 1) == 0u);
  }
  CHECK_THROWS_AS(frobenius_exponent(561, 3, 0), DomainError);
}

TEST_CASE("check_order on reference numbers") {
  const KorseltReport r561 = check_order(f(561), 1);
  CHECK(r561.carmichael());
  CHECK(r561.verdict == Verdict::RigidCarmichaelOfOrder);  // every order-1 Carmichael number is rigid
  REQUIRE(r561.witnesses.size() == 3);
  for (const auto& w : r561.witnesses) CHECK(w.exponent == 0u);

  const KorseltReport r561_2 = check_order(f(561), 2);
  CHECK(r561_2.verdict == Verdict::NotCarmichael);
  bool found_11_2 = false;
  for (const auto& w : r561_2.witnesses) {
    if (w.prime == 11 && w.degree == 2) {
      found_11_2 = true;
      CHECK_FALSE(w.exponent.has_value());
    }
  }
  CHECK(found_11_2);

  CHECK(check_order(pinch(), 2).verdict == Verdict::RigidCarmichaelOfOrder);
  CHECK(pinch().value() == Nat(17) * 31 * 41 * 43 * 89 * 97 * 167 * 331);

  const KorseltReport four = check_order(f(4), 1);
  CHECK(four.verdict == Verdict::NotCarmichael);
  CHECK_FALSE(four.squarefree);
  CHECK(check_order(f(7), 1).verdict == Verdict::NotComposite);
  CHECK(check_order(FactoredNat{}, 1).verdict == Verdict::NotComposite);
  CHECK_THROWS_AS(check_order(f(561), 0), DomainError);
}

TEST_CASE("rigidity") {
  CHECK(is_rigid(f(561), 1));
  const auto& fx = fixtures();
  CHECK_FALSE(is_rigid(fx.nonrigid_smallest.factors, 2));
  CHECK(check_order(fx.nonrigid_smallest.factors, 2).verdict == Verdict::CarmichaelOfOrder);
  CHECK(check_order(fx.nonrigid_largest.factors, 2).verdict == Verdict::CarmichaelOfOrder);
  for (const auto& m : fx.l1_minimal) CHECK(is_rigid(m.factors, 2));
  for (const auto& m : fx.l2_single_divisor) CHECK(is_rigid(m.factors, 2));
}

TEST_CASE("max order") {
  CHECK(max_order(f(561), 4) == 1);
  CHECK(max_order(pinch(), 4) >= 2);
  CHECK(max_order(f(15), 4) == 0);
  CHECK(max_order(f(12), 4) == 0);
  CHECK(max_order(f(13), 4) == 0);
  for (unsigned m = 1; m <= max_order(pinch(), 6); ++m) CHECK(check_order(pinch(), m).carmichael());
}

TEST_CASE("order-1 census below 10^5 matches the classical list") {
  const std::vector<u64> expected{561,   1105,  1729,  2465,  2821,  6601,  8911,  10585,
                                  15841, 29341, 41041, 46657, 52633, 62745, 63973, 75361};
  std::vector<u64> found;
  for (u64 n = 2; n < 100000; ++n) {
    if (check_order(f(n), 1).carmichael()) found.push_back(n);
  }
  CHECK(found == expected);
}

TEST_CASE("Carmichael numbers of order m have at least three primes, all above m") {
  // Exhaustive for order 1 below 10^5; the order-2 fixtures cover m = 2.
  for (u64 n = 2; n < 100000; ++n) {
    const FactoredNat fn = f(n);
    if (!check_order(fn, 1).carmichael()) continue;
    CHECK(fn.distinct_primes() >= 3);
    CHECK(fn.factors().front().prime > 1);
  }
  for (const Fixture* fx : fixtures().numbers()) {
    const unsigned m = max_order(fx->factors, 3);
    REQUIRE(m >= 2);
    CHECK(fx->factors.distinct_primes() >= 3);
    CHECK(fx->factors.factors().front().prime > m);
  }
}

TEST_CASE("verdict names round-trip") {
  for (Verdict v : {Verdict::CarmichaelOfOrder, Verdict::RigidCarmichaelOfOrder, Verdict::NotCarmichael,
                    Verdict::NotComposite}) {
    CHECK(verdict_from_string(to_string(v)) == v);
  }
  CHECK_THROWS_AS(verdict_from_string("Prime"), ValidationError);
}
