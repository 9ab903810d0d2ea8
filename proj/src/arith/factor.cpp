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

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <utility>

#include "arith/montgomery.hpp"
#include "carmichael/arith.hpp"

namespace carmichael {
namespace {

// Brent's variant of Pollard rho on a 64-bit odd composite. Returns a proper
// factor, or 0 when the budget runs out.
u64 brent_u64(u64 n, u64& budget, std::mt19937_64& rng) {
  detail::Montgomery64 mont(n);
  constexpr u64 kBatch = 128;
  while (budget > 0) {
    const u64 c = mont.to(rng() % (n - 1) + 1);
    u64 y = mont.to(rng() % n);
    u64 x = y, ys = y, q = mont.one(), g = 1;
    auto f = [&](u64 v) { return mont.add(mont.mul(v, v), c); };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      budget -= std::min(budget, r);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = gcd_u64(q, n);
        const u64 spent = steps;
        if (spent >= budget) {
          budget = 0;
          if (g == 1 || g == n) return 0;
        } else {
          budget -= spent;
        }
      }
    }
    if (g == n) {
      // The batched product overshot; replay the last batch one step at a time.
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

Nat brent_big(const Nat& n, u64& budget, std::mt19937_64& rng) {
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(static_cast<unsigned long>(rng()));
  constexpr u64 kBatch = 128;
  while (budget > 0) {
    const Nat c = gmp_rng.get_z_range(n - 1) + 1;
    Nat y = gmp_rng.get_z_range(n);
    Nat x = y, ys = y, q = 1, g = 1;
    auto f = [&](const Nat& v) { return Nat((v * v + c) % n); };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      budget -= std::min(budget, r);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        const u64 spent = steps;
        if (spent >= budget) {
          budget = 0;
          if (g == 1 || g == n) return 0;
        } else {
          budget -= spent;
        }
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Nat(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

struct FactorState {
  std::map<Nat, unsigned> primes;
  std::vector<Nat> unfactored;
  u64 budget;
  std::mt19937_64 rng;
};

void split_cofactor(const Nat& n, FactorState& st) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++st.primes[n];
    return;
  }
  if (auto root = isqrt(n); root.exact) {
    split_cofactor(root.root, st);
    split_cofactor(root.root, st);
    return;
  }
  Nat d;
  if (fits_u64(n)) {
    d = nat_from_u64(brent_u64(nat_to_u64(n), st.budget, st.rng));
  } else {
    d = brent_big(n, st.budget, st.rng);
  }
  if (d == 0) {
    st.unfactored.push_back(n);
    return;
  }
  split_cofactor(d, st);
  split_cofactor(Nat(n / d), st);
}

}  // namespace

const std::vector<u64>& small_primes(u64 bound) {
  static std::mutex mu;
  static std::map<u64, std::unique_ptr<std::vector<u64>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[bound];
  if (!slot) {
    slot = std::make_unique<std::vector<u64>>();
    std::vector<bool> composite(bound, false);
    for (u64 i = 2; i < bound; ++i) {
      if (composite[i]) continue;
      slot->push_back(i);
      for (u64 j = i * i; j < bound; j += i) composite[j] = true;
    }
  }
  return *slot;
}

FactorizationIncomplete::FactorizationIncomplete(FactoredNat partial, std::vector<Nat> unfactored)
    : Error([&] {
        std::string msg = "factorization incomplete: found " + partial.to_string() + ", unfactored";
        for (const auto& u : unfactored) msg += " " + u.get_str();
        return msg;
      }()),
      partial_(std::move(partial)),
      unfactored_(std::move(unfactored)) {}

FactoredNat factor(const Nat& n, const FactorOptions& options) {
  if (sgn(n) <= 0) throw DomainError("factor: n must be >= 1");
  FactorState st{{}, {}, options.rho_iterations, std::mt19937_64(options.seed)};
  Nat rest = n;
  bool rest_is_prime = false;
  for (u64 p : small_primes(options.trial_bound)) {
    if (rest == 1) break;
    if (nat_from_u64(p) * p > rest) {
      rest_is_prime = true;
      break;
    }
    if (fits_u64(rest)) {
      u64 r = nat_to_u64(rest);
      if (r % p == 0) {
        unsigned e = 0;
        while (r % p == 0) {
          r /= p;
          ++e;
        }
        st.primes[nat_from_u64(p)] += e;
        rest = nat_from_u64(r);
      }
    } else if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      st.primes[nat_from_u64(p)] += e;
    }
  }
  if (rest_is_prime && rest > 1) {
    ++st.primes[rest];
  } else if (rest > 1) {
    // Even cofactors only survive when the trial bound is tiny.
    while (mpz_even_p(rest.get_mpz_t())) {
      ++st.primes[Nat(2)];
      rest /= 2;
    }
    split_cofactor(rest, st);
  }
  std::vector<PrimePower> factors;
  factors.reserve(st.primes.size());
  for (auto& [p, e] : st.primes) factors.push_back({p, e});
  FactoredNat found = FactoredNat::from_factors(std::move(factors));
  if (!st.unfactored.empty()) throw FactorizationIncomplete(std::move(found), std::move(st.unfactored));
  return found;
}

}  // namespace carmichael
