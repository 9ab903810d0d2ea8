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

#include "carmichael/pool.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace carmichael {

void require_pool_modulus(const FactoredNat& modulus) {
  if (mpz_sizeinbase(modulus.value().get_mpz_t(), 2) > 63) {
    throw ValidationError("modulus " + modulus.value().get_str() + " must be below 2^63");
  }
}

bool in_pool(u64 p, unsigned m, u64 modulus) {
  if (p < 2 || modulus % p == 0) return false;
  u128 power = 1;
  for (unsigned r = 1; r <= m; ++r) {
    power *= p;
    if (power - 1 > modulus) return false;
    if (modulus % static_cast<u64>(power - 1) != 0) return false;
  }
  return true;
}

PrimePool prime_pool(unsigned m, const FactoredNat& modulus) {
  if (m == 0) throw DomainError("prime_pool: order must be >= 1");
  require_pool_modulus(modulus);
  const u64 L = nat_to_u64(modulus.value());
  PrimePool pool{m, modulus, {}};
  auto stream = divisors_u64(modulus);
  while (auto d = stream.next()) {
    const u64 p = *d + 1;
    // p - 1 | L holds by construction; the remaining conditions are checked by in_pool.
    if (is_prime_u64(p) && in_pool(p, m, L)) pool.primes.push_back(p);
  }
  std::sort(pool.primes.begin(), pool.primes.end());
  return pool;
}

namespace {

double log2_exact(const Nat& v) {
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp2);
}

}  // namespace

double phi_log2(const FactoredNat& modulus) { return log2_exact(euler_phi(modulus)); }

FecundityRecord fecundity(const FactoredNat& modulus, unsigned m) {
  const PrimePool pool = prime_pool(m, modulus);
  FecundityRecord rec;
  rec.modulus = modulus;
  rec.pool_size = pool.primes.size();
  rec.phi_log2 = phi_log2(modulus);
  rec.fecundity = static_cast<double>(rec.pool_size) - rec.phi_log2;
  rec.expected_count_log2 = rec.fecundity;
  return rec;
}

double expected_count(const FactoredNat& modulus, unsigned m) { return fecundity(modulus, m).fecundity; }

namespace {

struct ScanContext {
  const ScanOptions& options;
  std::vector<u64> primes;
  std::vector<unsigned> caps;
  std::size_t enumerated = 0;

  void charge() {
    if (++enumerated > options.max_candidates) {
      throw BudgetError("fecundity scan exceeds " + std::to_string(options.max_candidates) +
                        " candidates; tighten the exponent caps or the bound");
    }
  }

  // Visits every prod primes[k..]^e_k times `acc` that stays within the bound.
  template <typename Visit>
  void walk(std::size_t k, u64 acc, std::vector<unsigned>& exps, Visit&& visit) {
    if (k == primes.size()) {
      charge();
      visit(acc, exps);
      return;
    }
    u64 value = acc;
    for (unsigned e = 0; e <= caps[k]; ++e) {
      exps[k] = e;
      walk(k + 1, value, exps, visit);
      if (e == caps[k]) break;
      if (static_cast<u128>(value) * primes[k] > options.modulus_bound) break;
      value *= primes[k];
    }
    exps[k] = 0;
  }
};

}  // namespace

std::vector<FecundityRecord> fecundity_scan(const ScanOptions& options) {
  if (options.prime_bound > 100) throw ValidationError("fecundity_scan: prime bound must be <= 100");
  if (options.order == 0) throw DomainError("fecundity_scan: order must be >= 1");
  if (mpz_sizeinbase(nat_from_u64(options.modulus_bound).get_mpz_t(), 2) > 63) {
    throw ValidationError("fecundity_scan: bound must be below 2^63");
  }
  if (options.top_k == 0) return {};

  ScanContext ctx{options, {}, {}, 0};
  for (u64 p = 2; p <= options.prime_bound; ++p) {
    if (!is_prime_u64(p)) continue;
    ctx.primes.push_back(p);
    auto it = options.caps.find(p);
    ctx.caps.push_back(it == options.caps.end() ? options.default_cap : it->second);
  }
  std::vector<unsigned> exps(ctx.primes.size(), 0);

  // Every pool prime of every scanned L is d + 1 for some d in the scanned range.
  std::vector<u64> candidates;
  ctx.walk(0, 1, exps, [&](u64 d, const std::vector<unsigned>&) {
    if (is_prime_u64(d + 1)) candidates.push_back(d + 1);
  });
  std::sort(candidates.begin(), candidates.end());

  struct Scored {
    u64 L;
    std::vector<unsigned> exps;
    std::size_t pool_size;
    double phi_log2;
  };
  std::vector<Scored> scored;
  ctx.walk(0, 1, exps, [&](u64 L, const std::vector<unsigned>& e) {
    std::size_t count = 0;
    for (u64 p : candidates) {
      if (p - 1 > L) break;
      if (L % (p - 1) == 0 && in_pool(p, options.order, L)) ++count;
    }
    u64 phi = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      phi *= ctx.primes[k] - 1;
      for (unsigned j = 1; j < e[k]; ++j) phi *= ctx.primes[k];
    }
    scored.push_back({L, e, count, log2_exact(nat_from_u64(phi))});
  });

  auto better = [](const Scored& a, const Scored& b) {
    const double fa = static_cast<double>(a.pool_size) - a.phi_log2;
    const double fb = static_cast<double>(b.pool_size) - b.phi_log2;
    if (fa != fb) return fa > fb;
    return a.L < b.L;
  };
  const std::size_t keep = std::min(options.top_k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end(), better);

  std::vector<FecundityRecord> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    std::vector<PrimePower> factors;
    for (std::size_t k = 0; k < ctx.primes.size(); ++k) {
      if (scored[i].exps[k] > 0) factors.push_back({nat_from_u64(ctx.primes[k]), scored[i].exps[k]});
    }
    FecundityRecord rec;
    rec.modulus = FactoredNat::from_factors(std::move(factors));
    rec.pool_size = scored[i].pool_size;
    rec.phi_log2 = scored[i].phi_log2;
    rec.fecundity = static_cast<double>(rec.pool_size) - rec.phi_log2;
    rec.expected_count_log2 = rec.fecundity;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace carmichael
