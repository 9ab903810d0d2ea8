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

// Number theory primitives: arbitrary-precision naturals (GMP-backed), 64-bit
// fast paths, primality, factorization, divisor streams, CRT.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carmichael/errors.hpp"

namespace carmichael {

using Nat = mpz_class;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

Nat nat_from_u64(u64 v);
/// Throws DomainError when v is negative or does not fit in 64 bits.
u64 nat_to_u64(const Nat& v);
bool fits_u64(const Nat& v);
Nat parse_nat(std::string_view decimal);
std::string to_decimal(const Nat& v);

// ---------------------------------------------------------------------------
// 64-bit arithmetic

inline u64 mul_mod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 pow_mod_u64(u64 base, u64 exponent, u64 modulus);
u64 gcd_u64(u64 a, u64 b);
/// Throws NotInvertibleError when gcd(a, m) != 1.
u64 mod_inverse_u64(u64 a, u64 m);
/// Deterministic for every 64-bit input.
bool is_prime_u64(u64 n);

// ---------------------------------------------------------------------------
// Arbitrary precision

/// base^exponent mod modulus by left-to-right square-and-multiply. modulus = 0 is a DomainError.
Nat mod_pow(const Nat& base, const Nat& exponent, const Nat& modulus);

constexpr int kDefaultPrimalityRounds = 64;

/// Exact below 2^64 (fixed Miller-Rabin base set); above that, Miller-Rabin with
/// `rounds` pseudo-random bases, so a `true` there is probabilistic.
bool is_prime(const Nat& n, int rounds = kDefaultPrimalityRounds);

Nat gcd(const Nat& a, const Nat& b);
Nat lcm(const Nat& a, const Nat& b);

struct IntegerSqrt {
  Nat root;  // floor(sqrt(n))
  bool exact;
};
IntegerSqrt isqrt(const Nat& n);

/// b < m with a*b = 1 (mod m). Throws NotInvertibleError when gcd(a, m) != 1.
Nat mod_inverse(const Nat& a, const Nat& m);

// ---------------------------------------------------------------------------
// Factored naturals

struct PrimePower {
  Nat prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A natural number >= 1 carried with its complete prime factorization.
/// Primes are strictly increasing and each one passes is_prime.
class FactoredNat {
 public:
  FactoredNat() : value_(1) {}

  /// Validates ordering, primality and exponents; throws ValidationError otherwise.
  static FactoredNat from_factors(std::vector<PrimePower> factors);
  static FactoredNat from_primes(const std::vector<Nat>& squarefree_primes);

  const Nat& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t distinct_primes() const { return factors_.size(); }
  unsigned omega_with_multiplicity() const;
  bool squarefree() const;
  bool is_one() const { return factors_.empty(); }
  std::size_t divisor_count() const;

  /// `2^7*3^3*5^2*7` style; `1` for the empty factorization.
  std::string to_string() const;

  friend bool operator==(const FactoredNat& a, const FactoredNat& b) { return a.factors_ == b.factors_; }

 private:
  Nat value_;
  std::vector<PrimePower> factors_;
};

/// Parses `p1^e1*p2^e2*...` (`^1` omissible) or the literal `1`. Rejects non-prime
/// bases and non-increasing primes with ValidationError.
FactoredNat parse_factorization(std::string_view text);

struct FactorOptions {
  u64 trial_bound = 1'000'000;
  u64 rho_iterations = 10'000'000;  // total budget across all cofactors
  std::uint64_t seed = 1;
};

/// Raised when factor() exhausts its effort ceiling; carries what was found.
class FactorizationIncomplete : public Error {
 public:
  FactorizationIncomplete(FactoredNat partial, std::vector<Nat> unfactored);
  const FactoredNat& partial() const { return partial_; }
  const std::vector<Nat>& unfactored() const { return unfactored_; }

 private:
  FactoredNat partial_;
  std::vector<Nat> unfactored_;
};

/// Trial division by primes below options.trial_bound, then Pollard rho with
/// Brent cycle detection on what remains. n = 0 is a DomainError.
FactoredNat factor(const Nat& n, const FactorOptions& options = {});
/// Primes below `bound`, sieved once per bound and cached.
const std::vector<u64>& small_primes(u64 bound);

Nat euler_phi(const FactoredNat& f);

/// Lazily yields every divisor of a factored number exactly once, in
/// mixed-radix order over the exponent vector (deterministic for a given input).
template <typename Value>
class BasicDivisorStream {
 public:
  BasicDivisorStream(std::vector<Value> primes, std::vector<unsigned> exponents);

  std::optional<Value> next();

 private:
  std::vector<Value> primes_;
  std::vector<unsigned> exponents_;
  std::vector<unsigned> counter_;
  std::vector<Value> partial_;  // partial_[k] = prod_{j >= k} primes_[j]^counter_[j]
  bool done_ = false;
};

using DivisorStream = BasicDivisorStream<Nat>;
using DivisorStreamU64 = BasicDivisorStream<u64>;

DivisorStream divisors(const FactoredNat& f);
/// Requires f.value() < 2^64.
DivisorStreamU64 divisors_u64(const FactoredNat& f);

// ---------------------------------------------------------------------------
// Residues and CRT

class Residue {
 public:
  /// Requires modulus >= 1 and value < modulus (ValidationError otherwise).
  Residue(Nat value, Nat modulus);
  static Residue reduce(const Nat& value, const Nat& modulus);

  const Nat& value() const { return value_; }
  const Nat& modulus() const { return modulus_; }
  /// ValidationError unless modulus < 2^63.
  void require_machine_width() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Nat value_;
  Nat modulus_;
};

/// The residue mod lcm(m1, m2) meeting both congruences; CrtInconsistentError when
/// they disagree modulo gcd(m1, m2).
Residue crt_combine(const Residue& a, const Residue& b);

}  // namespace carmichael
