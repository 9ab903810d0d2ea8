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

#include <algorithm>
#include <random>
#include <set>

#include "arith/montgomery.hpp"
#include "carmichael/arith.hpp"
#include "carmichael/errors.hpp"

using namespace carmichael;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("64-bit primality agrees with trial division below 2^20") {
  for (u64 n = 0; n < (1u << 20); ++n) REQUIRE(is_prime_u64(n) == trial_prime(n));
}

TEST_CASE("strong pseudoprimes to small bases are rejected") {
  // Strong pseudoprimes to bases 2, 3, 5, 7 and beyond.
  for (u64 n : {2047ull, 1373653ull, 25326001ull, 3215031751ull, 2152302898747ull, 3474749660383ull,
                341550071728321ull, 3825123056546413051ull}) {
    CHECK_FALSE(is_prime_u64(n));
    CHECK_FALSE(is_prime(nat_from_u64(n)));
  }
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(Nat("318665857834031151167461")));
  CHECK(is_prime(Nat("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("u64 and big-integer arithmetic agree") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const u64 m = rng() | 1;
    const u64 a = rng() % m;
    const u64 e = rng() % 100000;
    CHECK(nat_from_u64(pow_mod_u64(a, e, m)) == mod_pow(nat_from_u64(a), nat_from_u64(e), nat_from_u64(m)));
    const u64 g = gcd_u64(a, m);
    CHECK(nat_from_u64(g) == gcd(nat_from_u64(a), nat_from_u64(m)));
    if (g == 1) {
      const u64 inv = mod_inverse_u64(a, m);
      CHECK(mul_mod_u64(a, inv, m) == 1 % m);
      CHECK(nat_from_u64(inv) == mod_inverse(nat_from_u64(a), nat_from_u64(m)));
    } else {
      CHECK_THROWS_AS(mod_inverse_u64(a, m), NotInvertibleError);
    }
  }
}

TEST_CASE("Montgomery multiplication matches 128-bit reduction") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const u64 n = (rng() | 1) >> (rng() % 60);
    if (n < 3) continue;
    const detail::Montgomery64 mont(n | 1);
    const u64 mod = mont.modulus();
    for (int j = 0; j < 20; ++j) {
      const u64 a = rng() % mod;
      const u64 b = rng() % mod;
      CHECK(mont.from(mont.mul(mont.to(a), mont.to(b))) == mul_mod_u64(a, b, mod));
      CHECK(mont.from(mont.add(mont.to(a), mont.to(b))) == static_cast<u64>((static_cast<u128>(a) + b) % mod));
      CHECK(mont.from(mont.sub(mont.to(a), mont.to(b))) == (a >= b ? a - b : a + (mod - b)));
      const u64 e = rng() % 1000;
      CHECK(mont.from(mont.pow(mont.to(a), e)) == pow_mod_u64(a, e, mod));
    }
  }
}

TEST_CASE("parsing and decimal conversion") {
  CHECK(parse_nat("0") == 0);
  CHECK(to_decimal(parse_nat("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_nat(""), ValidationError);
  CHECK_THROWS_AS(parse_nat("-5"), ValidationError);
  CHECK_THROWS_AS(parse_nat("12a"), ValidationError);
  CHECK_THROWS_AS(nat_to_u64(Nat("18446744073709551616")), DomainError);
  CHECK(nat_to_u64(Nat("18446744073709551615")) == ~u64{0});

  const FactoredNat f = parse_factorization("2^7*3^3*5^2*7*11*13*17*19*29");
  CHECK(f.value() == Nat("810118108800"));
  CHECK(f.to_string() == "2^7*3^3*5^2*7*11*13*17*19*29");
  CHECK(parse_factorization("1").is_one());
  CHECK_THROWS_AS(parse_factorization("4*3"), ValidationError);
  CHECK_THROWS_AS(parse_factorization("3*2"), ValidationError);
  CHECK_THROWS_AS(parse_factorization("3*3"), ValidationError);
  CHECK_THROWS_AS(parse_factorization("2^0"), ValidationError);
  CHECK_THROWS_AS(parse_factorization("2^x"), ValidationError);
}

TEST_CASE("factor round-trips and respects its ceiling") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Nat n = nat_from_u64(rng() >> (rng() % 40)) + 1;
    const FactoredNat f = factor(n);
    CHECK(f.value() == n);
    for (const auto& pp : f.factors()) CHECK(is_prime(pp.prime));
  }
  // Both prime factors lie above the trial-division bound.
  const Nat semi = Nat("1000000007") * Nat("998244353");
  CHECK(factor(semi).distinct_primes() == 2);
  CHECK(factor(Nat(1)).is_one());
  CHECK_THROWS_AS(factor(Nat(0)), DomainError);

  // Two 64-bit primes with a tiny rho budget cannot be split.
  const Nat hard = Nat("18446744073709551557") * Nat("18446744073709551533");
  FactorOptions tight;
  tight.trial_bound = 1000;
  tight.rho_iterations = 1000;
  try {
    (void)factor(hard * 12, tight);
    FAIL("expected FactorizationIncomplete");
  } catch (const FactorizationIncomplete& e) {
    CHECK(e.partial().value() == 12);
    REQUIRE(e.unfactored().size() == 1);
    CHECK(e.unfactored().front() == hard);
  }
}

TEST_CASE("divisor streams yield each divisor exactly once") {
  const FactoredNat f = parse_factorization("2^4*3^2*5*7^3");
  std::set<u64> seen;
  auto stream = divisors_u64(f);
  while (auto d = stream.next()) {
    CHECK(nat_to_u64(f.value()) % *d == 0);
    CHECK(seen.insert(*d).second);
  }
  CHECK(seen.size() == f.divisor_count());
  CHECK(seen.size() == 5 * 3 * 2 * 4);

  std::size_t big = 0;
  auto big_stream = divisors(f);
  while (auto d = big_stream.next()) {
    CHECK(seen.contains(nat_to_u64(*d)));
    ++big;
  }
  CHECK(big == seen.size());

  auto one = divisors_u64(FactoredNat{});
  CHECK(one.next() == std::optional<u64>(1));
  CHECK_FALSE(one.next().has_value());
}

TEST_CASE("Euler phi against a gcd count") {
  for (u64 n = 1; n < 600; ++n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k) count += gcd_u64(k, n) == 1;
    CHECK(euler_phi(factor(nat_from_u64(n))) == nat_from_u64(count));
  }
}

TEST_CASE("CRT combination") {
  const Residue r = crt_combine(Residue(2, 3), Residue(3, 5));
  CHECK(r.value() == 8);
  CHECK(r.modulus() == 15);
  const Residue shared = crt_combine(Residue(1, 4), Residue(3, 6));
  CHECK(shared.value() == 9);
  CHECK(shared.modulus() == 12);
  CHECK_THROWS_AS(crt_combine(Residue(0, 4), Residue(1, 6)), CrtInconsistentError);
  CHECK_THROWS_AS(Residue(5, 5), ValidationError);
  CHECK_THROWS_AS(Residue(0, 0), ValidationError);
  CHECK_THROWS_AS(Residue(0, Nat(1) << 63).require_machine_width(), ValidationError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const u64 m1 = rng() % 10000 + 1;
    const u64 m2 = rng() % 10000 + 1;
    const u64 x = rng() % (m1 * m2);
    const Residue c = crt_combine(Residue(x % m1, m1), Residue(x % m2, m2));
    CHECK(c.modulus() == lcm(nat_from_u64(m1), nat_from_u64(m2)));
    CHECK(c.value() == nat_from_u64(x) % c.modulus());
  }
}

TEST_CASE("integer square root") {
  CHECK(isqrt(Nat(0)).root == 0);
  CHECK(isqrt(Nat(49)).exact);
  CHECK_FALSE(isqrt(Nat(50)).exact);
  CHECK(isqrt(Nat(50)).root == 7);
  CHECK_THROWS_AS(isqrt(Nat(-1)), DomainError);
}
