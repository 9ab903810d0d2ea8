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
#include <string>

#include "carmichael/oracle.hpp"
#include "oracle/poly.hpp"

namespace carmichael {

using detail::pow_mod;
using detail::trim;

Nat FiniteField::size() const {
  Nat q;
  mpz_pow_ui(q.get_mpz_t(), characteristic.get_mpz_t(), degree);
  return q;
}

bool is_irreducible(const Poly& f_in, const Nat& p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2 || f.back() != 1) throw ValidationError("is_irreducible: f must be monic of degree >= 1");
  const unsigned r = static_cast<unsigned>(f.size() - 1);
  if (r == 1) return true;
  const Poly x{0, 1};
  // frob[k] = x^{p^k} mod f
  std::vector<Poly> frob{detail::reduce(x, f, p)};
  for (unsigned k = 1; k <= r; ++k) frob.push_back(pow_mod(frob.back(), p, f, p));
  if (frob[r] != detail::reduce(x, f, p)) return false;
  for (unsigned q = 2; q <= r; ++q) {
    if (r % q != 0 || !is_prime_u64(q)) continue;
    const Poly g = detail::gcd_field(detail::sub(frob[r / q], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FiniteField make_field(const Nat& p, unsigned r, std::uint64_t seed) {
  if (!is_prime(p)) throw DomainError("make_field: " + p.get_str() + " is not prime");
  if (r == 0) throw DomainError("make_field: degree must be >= 1");
  if (r == 1) return {p, 1, Poly{0, 1}};
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (unsigned attempt = 0; attempt < 1000 * r; ++attempt) {
    Poly f = detail::random_element(rng, p, r);
    f.push_back(1);
    if (is_irreducible(f, p)) return {p, r, std::move(f)};
  }
  throw InternalConsistencyError("make_field: no irreducible polynomial found for (" + p.get_str() + ", " +
                                 std::to_string(r) + ")");
}

namespace {

// A multiplicative generator of F_q^*, or nothing when q - 1 cannot be factored.
std::optional<Poly> find_generator(const FiniteField& F, gmp_randclass& rng) {
  const Nat order = F.size() - 1;
  FactoredNat fq;
  try {
    fq = factor(order);
  } catch (const FactorizationIncomplete&) {
    return std::nullopt;
  }
  const Poly one{1};
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Poly g = detail::random_element(rng, F.characteristic, F.degree);
    trim(g);
    if (g.empty()) continue;
    const bool generates = std::all_of(fq.factors().begin(), fq.factors().end(), [&](const PrimePower& pp) {
      return pow_mod(g, order / pp.prime, F.modulus_poly, F.characteristic) != one;
    });
    if (generates) return g;
  }
  return std::nullopt;
}

}  // namespace

OracleVerdict endo_probe_field(const FiniteField& F, const Nat& n, std::size_t trials, std::uint64_t seed) {
  const Nat& p = F.characteristic;
  if (n % p != 0) throw DomainError("endo_probe_field: " + p.get_str() + " does not divide n");
  OracleVerdict v;
  v.ring = RingKind::FiniteField;
  v.modulus = p;
  v.poly = F.modulus_poly;
  v.exponent = n;
  v.seed = seed;
  v.trials = trials;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    Poly x = detail::random_element(rng, p, F.degree);
    Poly y = detail::random_element(rng, p, F.degree);
    if (detail::refutes(x, y, n, F.modulus_poly, p)) {
      ++v.failures;
      if (!v.witness) v.witness = OracleWitness{std::move(x), std::move(y)};
    }
  }

  // x -> x^n is additive on F iff it is a power of Frobenius, which a
  // generator g decides: g^n must equal some g^{p^i} with i < r.
  if (const auto g = find_generator(F, rng)) {
    v.orbit_checked = true;
    const Poly gn = pow_mod(*g, n, F.modulus_poly, p);
    bool in_orbit = false;
    Poly frob = *g;
    for (unsigned i = 0; i < F.degree && !in_orbit; ++i) {
      in_orbit = frob == gn;
      frob = pow_mod(frob, p, F.modulus_poly, p);
    }
    if (!in_orbit && !v.witness) {
      const std::size_t extra = std::max<std::size_t>(4096, 16 * trials);
      for (std::size_t i = 0; i < extra && !v.witness; ++i) {
        Poly x = detail::random_element(rng, p, F.degree);
        Poly y = detail::random_element(rng, p, F.degree);
        if (detail::refutes(x, y, n, F.modulus_poly, p)) {
          v.failures = std::max<std::size_t>(v.failures, 1);
          v.witness = OracleWitness{std::move(x), std::move(y)};
        }
      }
      if (!v.witness) {
        throw InternalConsistencyError("endo_probe_field: generator test refutes additivity but no witness pair found");
      }
    }
  }
  v.verdict = v.witness ? OracleOutcome::RefutedWithWitness : OracleOutcome::ConsistentWithEndomorphism;
  return v;
}

}  // namespace carmichael
