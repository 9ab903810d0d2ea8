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
#include "oracle/poly.hpp"

namespace carmichael {

QuotientRing make_quotient_ring(const Nat& n, Poly f) {
  if (n < 2) throw ValidationError("quotient ring: n must be >= 2");
  for (auto& c : f) {
    c %= n;
    if (c < 0) c += n;
  }
  detail::trim(f);
  if (f.size() < 2 || f.back() != 1) throw ValidationError("quotient ring: f must be monic of degree >= 1");
  return {n, std::move(f)};
}

QuotientRing random_quotient_ring(const Nat& n, unsigned degree, std::uint64_t seed) {
  if (degree == 0) throw DomainError("random_quotient_ring: degree must be >= 1");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  Poly f = detail::random_element(rng, n, degree);
  f.push_back(1);
  return make_quotient_ring(n, std::move(f));
}

OracleVerdict endo_probe_quotient(const QuotientRing& R, const Nat& n, std::size_t trials, std::uint64_t seed) {
  OracleVerdict v;
  v.ring = RingKind::QuotientRing;
  v.modulus = R.n;
  v.poly = R.f;
  v.exponent = n;
  v.seed = seed;
  v.trials = trials;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  const std::size_t d = R.f.size() - 1;
  for (std::size_t i = 0; i < trials; ++i) {
    Poly x = detail::random_element(rng, R.n, d);
    Poly y = detail::random_element(rng, R.n, d);
    if (detail::refutes(x, y, n, R.f, R.n)) {
      ++v.failures;
      if (!v.witness) v.witness = OracleWitness{std::move(x), std::move(y)};
    }
  }
  v.verdict = v.witness ? OracleOutcome::RefutedWithWitness : OracleOutcome::ConsistentWithEndomorphism;
  return v;
}

bool recheck_witness(const OracleVerdict& v) {
  if (!v.witness) return false;
  if (v.modulus < 2) throw ValidationError("oracle verdict: modulus must be >= 2");
  Poly f = v.poly;
  detail::trim(f);
  if (f.size() < 2 || f.back() != 1) throw ValidationError("oracle verdict: ring polynomial must be monic");
  return detail::refutes(v.witness->x, v.witness->y, v.exponent, f, v.modulus);
}

std::string OracleVerdict::subject() const {
  const std::string f = detail::poly_to_string(poly);
  if (ring == RingKind::FiniteField) {
    return "F_" + modulus.get_str() + "^" + std::to_string(poly.size() - 1) + " = F_" + modulus.get_str() + "[x]/(" +
           f + ")";
  }
  return "(Z/" + modulus.get_str() + "Z)[x]/(" + f + ")";
}

}  // namespace carmichael
