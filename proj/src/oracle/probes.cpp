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

#include <string>

#include "carmichael/oracle.hpp"

namespace carmichael {

std::string_view to_string(OracleOutcome outcome) {
  return outcome == OracleOutcome::ConsistentWithEndomorphism ? "ConsistentWithEndomorphism" : "RefutedWithWitness";
}

OracleOutcome oracle_outcome_from_string(std::string_view name) {
  for (auto o : {OracleOutcome::ConsistentWithEndomorphism, OracleOutcome::RefutedWithWitness}) {
    if (to_string(o) == name) return o;
  }
  throw ValidationError("unknown oracle outcome '" + std::string(name) + "'");
}

std::string_view to_string(RingKind kind) { return kind == RingKind::FiniteField ? "field" : "quotient"; }

RingKind ring_kind_from_string(std::string_view name) {
  for (auto k : {RingKind::FiniteField, RingKind::QuotientRing}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown ring kind '" + std::string(name) + "'");
}

namespace {

// Deliberately plain: no Montgomery form, no shared helpers.
u64 naive_pow_mod(u64 a, u64 e, u64 n) {
  unsigned __int128 result = 1 % n, base = a % n;
  while (e > 0) {
    if (e & 1) result = result * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return static_cast<u64>(result);
}

bool composite_by_trial_division(u64 n) {
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<u64> exhaustive_order1(u64 limit, u64 max_limit) {
  if (limit > max_limit) {
    throw DomainError("exhaustive_order1: limit " + std::to_string(limit) + " exceeds " + std::to_string(max_limit));
  }
  std::vector<u64> out;
  for (u64 n = 4; n <= limit; ++n) {
    if (!composite_by_trial_division(n)) continue;
    bool all = true;
    for (u64 a = 2; a < n && all; ++a) all = naive_pow_mod(a, n, n) == a;
    if (all) out.push_back(n);
  }
  return out;
}

bool binomial_lemma_check(const FactoredNat& n, unsigned m) {
  const Nat& v = n.value();
  Nat c;
  for (unsigned r = 1; r <= m; ++r) {
    mpz_bin_ui(c.get_mpz_t(), v.get_mpz_t(), r);
    if (c % v != 0) return false;
  }
  return true;
}

bool AgreementReport::agrees() const {
  const bool prime = n.factors().size() == 1 && n.factors()[0].exponent == 1;
  const bool positive =
      korselt == Verdict::CarmichaelOfOrder || korselt == Verdict::RigidCarmichaelOfOrder || prime;
  return positive == probes_consistent;
}

AgreementReport oracle_agreement(const FactoredNat& n, unsigned m, const AgreementOptions& options) {
  if (n.value() < 2) throw DomainError("oracle_agreement: n must be >= 2");
  AgreementReport report;
  report.n = n;
  report.order = m;
  report.korselt = check_order(n, m).verdict;
  std::uint64_t stream = 0;
  auto next_seed = [&] { return options.seed * 0x9E3779B97F4A7C15ull + ++stream; };
  auto record = [&](OracleVerdict v) {
    if (v.verdict == OracleOutcome::RefutedWithWitness) report.probes_consistent = false;
    report.probes.push_back(std::move(v));
  };

  for (const auto& pp : n.factors()) {
    for (unsigned r = 1; r <= m; ++r) {
      const FiniteField F = make_field(pp.prime, r, next_seed());
      record(endo_probe_field(F, n.value(), options.field_trials, next_seed()));
    }
  }

  std::vector<QuotientRing> rings;
  Poly xm(m + 1, 0);
  xm[m] = 1;
  rings.push_back(make_quotient_ring(n.value(), xm));
  if (m >= 2) {
    // x^2 - p: nilpotent part over the p-component, etale elsewhere.
    rings.push_back(make_quotient_ring(n.value(), Poly{-n.factors().front().prime, 0, 1}));
  }
  for (unsigned i = 0; rings.size() < options.quotient_rings; ++i) {
    rings.push_back(random_quotient_ring(n.value(), 1 + i % m, next_seed()));
  }
  for (const auto& R : rings) record(endo_probe_quotient(R, n.value(), options.quotient_trials, next_seed()));
  return report;
}

}  // namespace carmichael
