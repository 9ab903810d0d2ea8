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

// Prime pools P(m, L): primes p not dividing L with p^r - 1 | L for every
// 1 <= r <= m. Squarefree products of pool primes that are 1 mod L are rigid
// Carmichael numbers of order m, and about 2^{#P(m,L)} / phi(L) of them are
// expected; log2 of that estimate is the fecundity of L.

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "carmichael/arith.hpp"

namespace carmichael {

struct PrimePool {
  unsigned order = 1;
  FactoredNat modulus;
  std::vector<u64> primes;  // ascending

  friend bool operator==(const PrimePool&, const PrimePool&) = default;
};

struct FecundityRecord {
  FactoredNat modulus;
  std::size_t pool_size = 0;
  double phi_log2 = 0;
  double fecundity = 0;            // pool_size - phi_log2
  double expected_count_log2 = 0;  // equal to fecundity

  friend bool operator==(const FecundityRecord&, const FecundityRecord&) = default;
};

/// Throws ValidationError unless 1 <= L < 2^63.
void require_pool_modulus(const FactoredNat& modulus);

/// True iff p does not divide L and p^r - 1 divides L for all 1 <= r <= m.
bool in_pool(u64 p, unsigned m, u64 modulus);

/// Enumerates divisors d of L with d + 1 prime and keeps the p = d + 1 meeting
/// the higher-degree conditions.
PrimePool prime_pool(unsigned m, const FactoredNat& modulus);

/// log2(phi(L)), computed from the exact big-integer phi.
double phi_log2(const FactoredNat& modulus);

FecundityRecord fecundity(const FactoredNat& modulus, unsigned m);

/// log2 of the heuristic count 2^{#P(m,L)} / phi(L).
double expected_count(const FactoredNat& modulus, unsigned m);

struct ScanOptions {
  u64 prime_bound = 37;
  /// Maximum exponent per prime; primes absent from the map use default_cap.
  std::map<u64, unsigned> caps;
  unsigned default_cap = 1;
  u64 modulus_bound = 0;
  unsigned order = 2;
  std::size_t top_k = 10;
  std::size_t max_candidates = 5'000'000;  // enumerated moduli plus candidate divisors
};

/// Ranks every L = prod p^e (p <= prime_bound, e <= cap(p), L <= modulus_bound)
/// by fecundity, descending, ties to the smaller L; returns the first top_k.
std::vector<FecundityRecord> fecundity_scan(const ScanOptions& options);

}  // namespace carmichael
