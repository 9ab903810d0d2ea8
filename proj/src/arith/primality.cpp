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

#include <array>
#include <random>

#include "arith/montgomery.hpp"
#include "carmichael/arith.hpp"

namespace carmichael {
namespace {

constexpr std::array<u64, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Strong probable-prime test for n < 2^32; every product fits in 64 bits.
bool sprp32(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = 1, b = a % n;
  for (u64 e = d; e; e >>= 1) {
    if (e & 1) x = x * b % n;
    b = b * b % n;
  }
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

bool sprp64(const detail::Montgomery64& mont, u64 a) {
  const u64 n = mont.modulus();
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const u64 am = mont.to(a);
  if (am == 0) return true;
  const u64 one = mont.one();
  const u64 minus_one = mont.sub(0, one);
  u64 x = mont.pow(am, d);
  if (x == one || x == minus_one) return true;
  for (int i = 1; i < s; ++i) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 37 * 37) return true;
  if (n < (u64{1} << 32)) {
    // {2, 7, 61} is exact below 4,759,123,141.
    return sprp32(n, 2) && sprp32(n, 7) && sprp32(n, 61);
  }
  // Sinclair's seven bases are exact for all n < 2^64.
  static constexpr std::array<u64, 7> kBases = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  detail::Montgomery64 mont(n);
  for (u64 a : kBases) {
    if (!sprp64(mont, a)) return false;
  }
  return true;
}

bool is_prime(const Nat& n, int rounds) {
  if (sgn(n) <= 0) return false;
  if (fits_u64(n)) return is_prime_u64(nat_to_u64(n));
  for (u64 p : kSmallPrimes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const Nat n_minus_1 = n - 1;
  Nat d = n_minus_1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Bases are a pure function of n so verdicts are reproducible.
  std::mt19937_64 rng(mpz_get_ui(n.get_mpz_t()) ^ 0x9e3779b97f4a7c15ULL);
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(static_cast<unsigned long>(rng()));
  const Nat span = n - 3;
  for (int round = 0; round < rounds; ++round) {
    Nat a = gmp_rng.get_z_range(span) + 2;  // a in [2, n-2]
    Nat x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace carmichael
