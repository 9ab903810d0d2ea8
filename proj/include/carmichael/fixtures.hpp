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

// Published reference numbers, each stored as a decimal value together with its
// factorization; loading checks that the two agree.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "carmichael/arith.hpp"

namespace carmichael {

struct Fixture {
  std::string name;
  Nat value;
  FactoredNat factors;
};

struct FixtureSet {
  FactoredNat l1;  // 2^7*3^3*5^2*7*11*13*17*19*29
  FactoredNat l2;  // l1 * 31
  Fixture pinch;   // rigid order-2 Carmichael number with 8 prime factors
  std::array<Fixture, 2> l1_minimal;         // the two 15-prime elements of C(2, L1)
  std::array<Fixture, 4> l2_single_divisor;  // C(2, L2) elements from single primes of S3
  Fixture nonrigid_smallest;                 // of C(2, L2, 1153)
  Fixture nonrigid_largest;
  u64 nonrigid_p0 = 1153;
  std::size_t pool_l1 = 45;
  std::size_t pool_l2 = 58;
  double fecundity_l1 = 8.039;
  double fecundity_l2 = 16.132;
  std::size_t census_l1 = 246;
  std::size_t nonrigid_count = 53;

  /// Every Carmichael fixture (not the moduli), in declaration order.
  std::vector<const Fixture*> numbers() const;
};

/// Built and validated on first use; ValidationError if a stored value does
/// not equal the product of its factors.
const FixtureSet& fixtures();

Fixture make_fixture(std::string name, const std::string& decimal, const std::string& factorization);

}  // namespace carmichael
