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

#include "carmichael/nonrigid.hpp"

#include <algorithm>

#include "carmichael/pool.hpp"

namespace carmichael {

NonRigidInstance validate_nonrigid(const FactoredNat& base_modulus, const Nat& p0) {
  if (!is_prime(p0)) {
    throw NonRigidValidationError(NonRigidViolation::NotPrime, "p0 = " + p0.get_str() + " is not prime");
  }
  const Nat& L0 = base_modulus.value();
  if (L0 % p0 == 0) {
    throw NonRigidValidationError(NonRigidViolation::DividesBaseModulus,
                                  "p0 = " + p0.get_str() + " divides L0 = " + L0.get_str());
  }
  const Nat square_minus_one = p0 * p0 - 1;
  const Nat g = gcd(L0, square_minus_one);
  if ((p0 - 1) % g != 0) {
    throw NonRigidValidationError(NonRigidViolation::GcdCondition,
                                  "gcd(L0, p0^2 - 1) = " + g.get_str() + " does not divide p0 - 1 = " +
                                      Nat(p0 - 1).get_str());
  }
  const Nat L = lcm(L0, square_minus_one);
  if (mpz_sizeinbase(L.get_mpz_t(), 2) > 63) {
    throw NonRigidValidationError(NonRigidViolation::ModulusTooLarge,
                                  "lcm(L0, p0^2 - 1) = " + L.get_str() + " is not below 2^63");
  }
  // Consistency of the two congruences modulo their gcd is exactly the gcd condition.
  const Residue t = crt_combine(Residue::reduce(mod_inverse(p0, L0), L0), Residue::reduce(1, square_minus_one));
  NonRigidInstance inst;
  inst.base_modulus = base_modulus;
  inst.p0 = nat_to_u64(p0);
  inst.modulus = nat_to_u64(L);
  inst.target = nat_to_u64(t.value());
  return inst;
}

u64 smallest_valid_p0(const FactoredNat& base_modulus, u64 search_bound) {
  for (u64 p = 2; p <= search_bound; ++p) {
    if (!is_prime_u64(p)) continue;
    try {
      validate_nonrigid(base_modulus, nat_from_u64(p));
      return p;
    } catch (const NonRigidValidationError& e) {
      if (e.violation() == NonRigidViolation::ModulusTooLarge) throw;
    }
  }
  throw BudgetError("no valid p0 up to " + std::to_string(search_bound) + " for L0 = " + base_modulus.to_string());
}

std::vector<u64> nonrigid_search_primes(const NonRigidInstance& instance) {
  const PrimePool pool = prime_pool(2, instance.base_modulus);
  std::vector<u64> out;
  // A prime dividing p0^2 - 1 cannot divide an n0 that is 1 mod p0^2 - 1.
  std::copy_if(pool.primes.begin(), pool.primes.end(), std::back_inserter(out),
               [&](u64 p) { return instance.modulus % p != 0; });
  return out;
}

MemberCheck check_nonrigid_member(const NonRigidInstance& instance, const FactoredNat& n) {
  MemberCheck out;
  out.report = check_order(n, 2);
  const Nat p0 = nat_from_u64(instance.p0);
  auto fail = [&](std::string reason) {
    out.ok = false;
    out.reason = std::move(reason);
    return out;
  };
  if (!n.squarefree()) return fail("n is not squarefree");
  if (n.value() % p0 != 0) return fail("p0 does not divide n");
  const Nat n0 = n.value() / p0;
  if (n0 % nat_from_u64(instance.modulus) != nat_from_u64(instance.target)) {
    return fail("n / p0 is not congruent to the target modulo L");
  }
  const auto allowed = nonrigid_search_primes(instance);
  for (const auto& pp : n.factors()) {
    if (pp.prime == p0) continue;
    if (!fits_u64(pp.prime) || !std::binary_search(allowed.begin(), allowed.end(), nat_to_u64(pp.prime))) {
      return fail("prime " + pp.prime.get_str() + " is not in P(2, L0)");
    }
  }
  if (out.report.verdict != Verdict::CarmichaelOfOrder) {
    return fail("verdict is " + std::string(to_string(out.report.verdict)) + ", expected CarmichaelOfOrder");
  }
  for (const auto& w : out.report.witnesses) {
    const bool at_p0 = w.prime == p0 && w.degree == 2;
    if (at_p0 && w.exponent != 1u) return fail("Frobenius exponent at (p0, 2) is not 1");
  }
  out.ok = true;
  return out;
}

NonRigidCensus search_nonrigid(const NonRigidInstance& instance, const PartitionStrategy& strategy,
                               SearchOptions options) {
  NonRigidCensus census;
  census.instance = instance;
  const auto primes = nonrigid_search_primes(instance);
  census.pool_size = prime_pool(2, instance.base_modulus).primes.size();
  options.min_subset_size = 1;
  const auto sp = make_instance(primes, instance.modulus, instance.target, strategy);
  census.n0_census = enumerate_hits(sp, options);
  const Nat p0 = nat_from_u64(instance.p0);
  for (const auto& hit : census.n0_census.hits) {
    std::vector<Nat> factor_primes{p0};
    for (std::size_t i = 0; i < sp.primes.size(); ++i) {
      if (hit.subset >> i & 1) factor_primes.push_back(nat_from_u64(sp.primes[i]));
    }
    std::sort(factor_primes.begin(), factor_primes.end());
    NonRigidMember member{hit.product * p0, hit.product, instance.p0, FactoredNat::from_primes(factor_primes)};
    const MemberCheck check = check_nonrigid_member(instance, member.factors);
    if (!check.ok) {
      throw InternalConsistencyError("non-rigid census member " + member.n.get_str() + " failed: " + check.reason);
    }
    census.members.push_back(std::move(member));
  }
  std::sort(census.members.begin(), census.members.end(),
            [](const NonRigidMember& a, const NonRigidMember& b) { return a.n < b.n; });
  census.expected_log2 = static_cast<double>(census.pool_size) - phi_log2(factor(nat_from_u64(instance.modulus)));
  return census;
}

}  // namespace carmichael
