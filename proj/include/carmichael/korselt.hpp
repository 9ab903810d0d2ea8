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

// Korselt-type decision procedure for Carmichael numbers of order m.
//
// A composite n is a Carmichael number of order m iff n is squarefree and for
// every prime p | n and every 1 <= r <= m there is an i >= 0 with
// n = p^i (mod p^r - 1). It is rigid when every such i can be taken to be 0.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "carmichael/arith.hpp"

namespace carmichael {

enum class Verdict { CarmichaelOfOrder, RigidCarmichaelOfOrder, NotCarmichael, NotComposite };

std::string_view to_string(Verdict v);
/// Throws ValidationError on unknown names.
Verdict verdict_from_string(std::string_view name);

struct FrobeniusWitness {
  Nat prime;
  unsigned degree = 1;
  std::optional<unsigned> exponent;  // least i in [0, degree) with n = prime^i mod (prime^degree - 1)

  friend bool operator==(const FrobeniusWitness&, const FrobeniusWitness&) = default;
};

struct KorseltReport {
  FactoredNat n;
  unsigned order = 1;
  bool squarefree = false;
  bool composite = false;
  std::vector<FrobeniusWitness> witnesses;  // ordered by prime, then degree
  Verdict verdict = Verdict::NotComposite;

  /// True for both the rigid and the non-rigid Carmichael verdicts.
  bool carmichael() const {
    return verdict == Verdict::CarmichaelOfOrder || verdict == Verdict::RigidCarmichaelOfOrder;
  }

  friend bool operator==(const KorseltReport&, const KorseltReport&) = default;
};

/// Least i in [0, r) with n = p^i (mod p^r - 1), or nullopt. The powers of p
/// modulo p^r - 1 cycle with period r, so the range is complete; for
/// p^r - 1 = 1 every n qualifies with i = 0.
std::optional<unsigned> frobenius_exponent(const Nat& n, const Nat& p, unsigned r);

/// Evaluates every (p, r) witness for p | n, 1 <= r <= m, even when n is
/// already disqualified, so reports are complete.
KorseltReport check_order(const FactoredNat& n, unsigned m);

bool is_rigid(const FactoredNat& n, unsigned m);

/// Largest m <= m_cap for which n is a Carmichael number of order m, or 0.
unsigned max_order(const FactoredNat& n, unsigned m_cap);

}  // namespace carmichael
