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

// Non-rigid Carmichael numbers of order 2 of the form n = p0 * n0, where n0 is
// a squarefree product of primes from P(2, L0) with n0 = 1 (mod p0^2 - 1) and
// p0 * n0 = 1 (mod L0). For such n the Frobenius exponent at (p0, 2) is 1, so
// n is order-2 Carmichael without being rigid.

#pragma once

#include <string>
#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/mitm.hpp"

namespace carmichael {

enum class NonRigidViolation { NotPrime, DividesBaseModulus, GcdCondition, ModulusTooLarge };

class NonRigidValidationError : public ValidationError {
 public:
  NonRigidValidationError(NonRigidViolation violation, const std::string& what)
      : ValidationError(what), violation_(violation) {}
  NonRigidViolation violation() const { return violation_; }

 private:
  NonRigidViolation violation_;
};

struct NonRigidInstance {
  FactoredNat base_modulus;  // L0
  u64 p0 = 2;
  u64 modulus = 1;  // L = lcm(L0, p0^2 - 1), below 2^63
  u64 target = 0;   // t mod L with t = 1 (mod p0^2 - 1), p0 * t = 1 (mod L0)
};

/// Checks p0 prime, p0 not dividing L0, gcd(L0, p0^2 - 1) | p0 - 1 and
/// L < 2^63; each failure raises NonRigidValidationError naming the condition.
NonRigidInstance validate_nonrigid(const FactoredNat& base_modulus, const Nat& p0);

/// Smallest prime passing validate_nonrigid, scanning up to search_bound;
/// BudgetError when none is found.
u64 smallest_valid_p0(const FactoredNat& base_modulus, u64 search_bound = 1'000'000);

struct NonRigidMember {
  Nat n;
  Nat n0;
  u64 p0 = 2;
  FactoredNat factors;

  friend bool operator==(const NonRigidMember&, const NonRigidMember&) = default;
};

struct NonRigidCensus {
  NonRigidInstance instance;
  CensusResult n0_census;               // hits are the n0 cofactors
  std::vector<NonRigidMember> members;  // sorted by n
  std::size_t pool_size = 0;            // #P(2, L0)
  double expected_log2 = 0;             // #P(2, L0) - log2 phi(L)
};

/// Pool primes usable for n0: P(2, L0) without primes dividing p0^2 - 1.
std::vector<u64> nonrigid_search_primes(const NonRigidInstance& instance);

/// Runs the subset-product search with modulus L and target t, then checks
/// every n = p0 * n0 is order-2 Carmichael, not rigid, with exponent 1 at p0.
/// Single-prime n0 are kept (n = p0 * q is already composite).
NonRigidCensus search_nonrigid(const NonRigidInstance& instance, const PartitionStrategy& strategy,
                               SearchOptions options = {});

struct MemberCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  KorseltReport report;
};

/// Membership test for a single candidate n in the family, without a search.
MemberCheck check_nonrigid_member(const NonRigidInstance& instance, const FactoredNat& n);

}  // namespace carmichael
