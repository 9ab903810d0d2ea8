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
#include <cmath>
#include <random>
#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/errors.hpp"
#include "carmichael/fixtures.hpp"
#include "carmichael/pool.hpp"

using namespace carmichael;

namespace {

std::vector<u64> sieve(u64 bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

// Definition-level pool: every prime up to L + 1, each condition checked directly.
std::vector<u64> brute_pool(u64 L, unsigned m, const std::vector<u64>& primes) {
  std::vector<u64> out;
  for (u64 p : primes) {
    if (p > L + 1) break;
    if (L % p == 0) continue;
    bool ok = true;
    u64 power = 1;
    for (unsigned r = 1; r <= m && ok; ++r) {
      power *= p;
      ok = power - 1 <= L && L % (power - 1) == 0;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

FactoredNat f(u64 n) { return factor(nat_from_u64(n)); }

}  // namespace

TEST_CASE("pool matches the definition for small and sampled moduli") {
  const std::vector<u64> primes = sieve(1'000'001);
  for (u64 L = 1; L < 5000; ++L) {
    const FactoredNat fl = f(L);
    for (unsigned m = 1; m <= 3; ++m) REQUIRE(prime_pool(m, fl).primes == brute_pool(L, m, primes));
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    // Smooth moduli have large pools, uniform ones exercise the sparse case.
    u64 L = 1;
    if (i % 2 == 0) {
      L = rng() % 1'000'000 + 1;
    } else {
      while (true) {
        const u64 next = L * std::vector<u64>{2, 2, 2, 3, 3, 5, 7, 11, 13}[rng() % 9];
        if (next >= 1'000'000) break;
        L = next;
      }
    }
    const FactoredNat fl = f(L);
    for (unsigned m = 1; m <= 3; ++m) REQUIRE(prime_pool(m, fl).primes == brute_pool(L, m, primes));
  }
}

TEST_CASE("reference pools and fecundities") {
  CHECK(prime_pool(2, f(120)).primes == std::vector<u64>{11});
  CHECK(prime_pool(1, f(120)).primes == std::vector<u64>{7, 11, 13, 31, 41, 61});
  CHECK(prime_pool(1, FactoredNat{}).primes == std::vector<u64>{2});
  CHECK(expected_count(FactoredNat{}, 1) == doctest::Approx(1.0));
  CHECK(fecundity(f(120), 2).fecundity == doctest::Approx(-4.0));

  const auto& fx = fixtures();
  CHECK(prime_pool(2, fx.l1).primes.size() == fx.pool_l1);
  CHECK(prime_pool(2, fx.l2).primes.size() == fx.pool_l2);
  CHECK(fecundity(fx.l1, 2).fecundity == doctest::Approx(fx.fecundity_l1).epsilon(1e-3));
  CHECK(fecundity(fx.l2, 2).fecundity == doctest::Approx(fx.fecundity_l2).epsilon(1e-3));
  CHECK(std::pow(2.0, expected_count(fx.l1, 2)) == doctest::Approx(263).epsilon(0.01));

  CHECK_THROWS_AS(prime_pool(0, f(120)), DomainError);
  CHECK_THROWS_AS(prime_pool(2, factor(Nat(1) << 63)), ValidationError);
}

TEST_CASE("fecundity scan") {
  ScanOptions none;
  none.top_k = 0;
  none.modulus_bound = 1000;
  CHECK(fecundity_scan(none).empty());

  ScanOptions tiny;
  tiny.prime_bound = 2;
  tiny.default_cap = 3;
  tiny.modulus_bound = 8;
  tiny.order = 1;
  tiny.top_k = 10;
  const auto recs = fecundity_scan(tiny);
  std::vector<u64> moduli;
  for (const auto& r : recs) {
    moduli.push_back(nat_to_u64(r.modulus.value()));
    CHECK(r.pool_size == prime_pool(1, r.modulus).primes.size());
  }
  std::sort(moduli.begin(), moduli.end());
  CHECK(moduli == std::vector<u64>{1, 2, 4, 8});
  CHECK(prime_pool(1, f(8)).primes == std::vector<u64>{3, 5});

  // L2's shape: 2^7 3^3 5^2 and the remaining primes up to 31 at most once.
  const auto& fx = fixtures();
  ScanOptions shape;
  shape.prime_bound = 37;
  shape.caps = {{2, 7}, {3, 3}, {5, 2}};
  shape.modulus_bound = nat_to_u64(fx.l2.value()) * 2;
  shape.order = 2;
  shape.top_k = 1'000'000;
  const auto ranked = fecundity_scan(shape);
  bool saw_l1 = false;
  bool saw_l2 = false;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i > 0) {
      CHECK(ranked[i - 1].fecundity >= ranked[i].fecundity);
    }
    if (ranked[i].modulus == fx.l1) {
      saw_l1 = true;
      CHECK(ranked[i].fecundity == doctest::Approx(fx.fecundity_l1).epsilon(1e-3));
    }
    if (ranked[i].modulus == fx.l2) {
      saw_l2 = true;
      CHECK(ranked[i].fecundity == doctest::Approx(fx.fecundity_l2).epsilon(1e-3));
    }
  }
  CHECK(saw_l1);
  CHECK(saw_l2);
  // Scan results agree with the direct computation.
  for (std::size_t i = 0; i < std::min<std::size_t>(ranked.size(), 20); ++i) {
    CHECK(ranked[i].pool_size == prime_pool(2, ranked[i].modulus).primes.size());
  }

  ScanOptions ceiling = shape;
  ceiling.max_candidates = 100;
  CHECK_THROWS_AS(fecundity_scan(ceiling), BudgetError);
}
