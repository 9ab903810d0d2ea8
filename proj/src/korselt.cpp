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

#include "carmichael/korselt.hpp"

#include <algorithm>
#include <string>

namespace carmichael {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CarmichaelOfOrder:
      return "CarmichaelOfOrder";
    case Verdict::RigidCarmichaelOfOrder:
      return "RigidCarmichaelOfOrder";
    case Verdict::NotCarmichael:
      return "NotCarmichael";
    case Verdict::NotComposite:
      return "NotComposite";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view name) {
  for (Verdict v : {Verdict::CarmichaelOfOrder, Verdict::RigidCarmichaelOfOrder, Verdict::NotCarmichael,
                    Verdict::NotComposite}) {
    if (to_string(v) == name) return v;
  }
  throw ValidationError("unknown verdict '" + std::string(name) + "'");
}

std::optional<unsigned> frobenius_exponent(const Nat& n, const Nat& p, unsigned r) {
  if (r == 0) throw DomainError("frobenius_exponent: degree must be >= 1");
  Nat modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), r);
  modulus -= 1;
  if (modulus <= 1) return 0u;
  const Nat target = n % modulus;
  Nat power = 1;  // p^i < p^r - 1 for i < r, so no reduction is needed
  for (unsigned i = 0; i < r; ++i) {
    if (power == target) return i;
    power *= p;
  }
  return std::nullopt;
}

KorseltReport check_order(const FactoredNat& n, unsigned m) {
  if (m == 0) throw DomainError("check_order: order must be >= 1");
  KorseltReport report;
  report.n = n;
  report.order = m;
  report.squarefree = n.squarefree();
  report.composite = n.omega_with_multiplicity() >= 2;
  bool all_found = true;
  bool all_zero = true;
  for (const auto& pp : n.factors()) {
    for (unsigned r = 1; r <= m; ++r) {
      FrobeniusWitness w{pp.prime, r, frobenius_exponent(n.value(), pp.prime, r)};
      if (!w.exponent) {
        all_found = false;
      } else if (*w.exponent != 0) {
        all_zero = false;
      }
      report.witnesses.push_back(std::move(w));
    }
  }
  if (!report.composite) {
    report.verdict = Verdict::NotComposite;
  } else if (!report.squarefree || !all_found) {
    report.verdict = Verdict::NotCarmichael;
  } else {
    report.verdict = all_zero ? Verdict::RigidCarmichaelOfOrder : Verdict::CarmichaelOfOrder;
  }
  return report;
}

bool is_rigid(const FactoredNat& n, unsigned m) { return check_order(n, m).verdict == Verdict::RigidCarmichaelOfOrder; }

unsigned max_order(const FactoredNat& n, unsigned m_cap) {
  if (n.omega_with_multiplicity() < 2 || !n.squarefree()) return 0;
  unsigned best = 0;
  for (unsigned r = 1; r <= m_cap; ++r) {
    const bool ok = std::all_of(n.factors().begin(), n.factors().end(), [&](const PrimePower& pp) {
      return frobenius_exponent(n.value(), pp.prime, r).has_value();
    });
    if (!ok) break;  // the criterion is cumulative in r
    best = r;
  }
  return best;
}

}  // namespace carmichael
