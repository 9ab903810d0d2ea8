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

// Direct tests of the endomorphism property: is x -> x^n additive on a given
// Z/nZ-algebra? Works on finite fields F_{p^r} (p | n) and on monogenic
// quotient rings (Z/NZ)[x]/(f), including non-etale ones such as f = x^2.
// Probing samples; it never proves. check_order stays the decision procedure.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/korselt.hpp"

namespace carmichael {

/// Polynomial coefficients, constant term first.
using Poly = std::vector<Nat>;

struct FiniteField {
  Nat characteristic;  // p
  unsigned degree = 1;
  Poly modulus_poly;  // monic irreducible of degree r over F_p

  Nat size() const;  // p^r
};

/// Random monic polynomials (seeded) until one passes the irreducibility test;
/// r = 1 always yields the modulus x.
FiniteField make_field(const Nat& p, unsigned r, std::uint64_t seed = 1);

/// Rabin's test: f monic of degree r is irreducible over F_p iff
/// x^{p^r} = x mod f and gcd(x^{p^{r/q}} - x, f) = 1 for every prime q | r.
bool is_irreducible(const Poly& f, const Nat& p);

struct QuotientRing {
  Nat n;   // >= 2
  Poly f;  // monic, degree >= 1, coefficients reduced mod n
};

/// ValidationError unless n >= 2 and f is monic of degree >= 1.
QuotientRing make_quotient_ring(const Nat& n, Poly f);

/// (Z/nZ)[x]/(f) for a seeded random monic f of the given degree.
QuotientRing random_quotient_ring(const Nat& n, unsigned degree, std::uint64_t seed);

enum class OracleOutcome { ConsistentWithEndomorphism, RefutedWithWitness };
enum class RingKind { FiniteField, QuotientRing };

std::string_view to_string(OracleOutcome outcome);
OracleOutcome oracle_outcome_from_string(std::string_view name);
std::string_view to_string(RingKind kind);
RingKind ring_kind_from_string(std::string_view name);

struct OracleWitness {
  Poly x;
  Poly y;  // (x + y)^n != x^n + y^n in the ring

  friend bool operator==(const OracleWitness&, const OracleWitness&) = default;
};

struct OracleVerdict {
  RingKind ring = RingKind::QuotientRing;
  Nat modulus;  // p for a field, n for a quotient ring
  Poly poly;    // the ring's defining polynomial
  Nat exponent;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Field probes only: x^n was compared against the Frobenius orbit of a
  /// multiplicative generator.
  bool orbit_checked = false;
  OracleOutcome verdict = OracleOutcome::ConsistentWithEndomorphism;
  std::optional<OracleWitness> witness;

  std::string subject() const;
  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

/// Requires p | n (DomainError otherwise).
OracleVerdict endo_probe_field(const FiniteField& field, const Nat& n, std::size_t trials, std::uint64_t seed);

OracleVerdict endo_probe_quotient(const QuotientRing& ring, const Nat& n, std::size_t trials, std::uint64_t seed);

/// Recomputes the stored witness; true iff it still refutes additivity.
bool recheck_witness(const OracleVerdict& verdict);

/// Every composite n <= limit with a^n = a (mod n) for all a < n, by direct
/// exponentiation. DomainError when limit exceeds max_limit.
std::vector<u64> exhaustive_order1(u64 limit, u64 max_limit = 100'000);

/// True iff C(n, r) = 0 (mod n) for r = 1..m.
bool binomial_lemma_check(const FactoredNat& n, unsigned m);

struct AgreementReport {
  FactoredNat n;
  unsigned order = 1;
  Verdict korselt = Verdict::NotCarmichael;
  bool probes_consistent = true;
  std::vector<OracleVerdict> probes;

  /// Korselt says order-m Carmichael (or n is prime) iff no probe refuted.
  bool agrees() const;
};

struct AgreementOptions {
  std::size_t field_trials = 100;
  std::size_t quotient_trials = 100;
  std::size_t quotient_rings = 20;  // includes x^m and, for m >= 2, x^2 - p
  std::uint64_t seed = 1;
};

/// Field probes for every p | n and r <= m, plus quotient-ring probes, compared
/// against check_order(n, m).
AgreementReport oracle_agreement(const FactoredNat& n, unsigned m, const AgreementOptions& options = {});

}  // namespace carmichael
