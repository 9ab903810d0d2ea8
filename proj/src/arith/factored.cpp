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

#include <charconv>
#include <string>
#include <utility>

#include "carmichael/arith.hpp"

namespace carmichael {

FactoredNat FactoredNat::from_factors(std::vector<PrimePower> factors) {
  FactoredNat f;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& pp = factors[i];
    if (pp.exponent == 0) throw ValidationError("exponent of " + pp.prime.get_str() + " must be positive");
    if (i > 0 && !(factors[i - 1].prime < pp.prime)) {
      throw ValidationError("primes must be strictly increasing: " + factors[i - 1].prime.get_str() + " then " +
                            pp.prime.get_str());
    }
    if (!is_prime(pp.prime)) throw ValidationError(pp.prime.get_str() + " is not prime");
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    f.value_ *= power;
  }
  f.factors_ = std::move(factors);
  return f;
}

FactoredNat FactoredNat::from_primes(const std::vector<Nat>& squarefree_primes) {
  std::vector<PrimePower> factors;
  factors.reserve(squarefree_primes.size());
  for (const auto& p : squarefree_primes) factors.push_back({p, 1});
  return from_factors(std::move(factors));
}

unsigned FactoredNat::omega_with_multiplicity() const {
  unsigned total = 0;
  for (const auto& pp : factors_) total += pp.exponent;
  return total;
}

bool FactoredNat::squarefree() const {
  for (const auto& pp : factors_) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::size_t FactoredNat::divisor_count() const {
  std::size_t count = 1;
  for (const auto& pp : factors_) count *= pp.exponent + 1;
  return count;
}

std::string FactoredNat::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& pp : factors_) {
    if (!out.empty()) out += '*';
    out += pp.prime.get_str();
    if (pp.exponent != 1) out += '^' + std::to_string(pp.exponent);
  }
  return out;
}

FactoredNat parse_factorization(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return FactoredNat();
  std::vector<PrimePower> factors;
  while (true) {
    const auto star = text.find('*');
    std::string_view term = trim(text.substr(0, star));
    const auto caret = term.find('^');
    PrimePower pp;
    pp.prime = parse_nat(trim(term.substr(0, caret)));
    if (caret != std::string_view::npos) {
      std::string_view exp = trim(term.substr(caret + 1));
      unsigned e = 0;
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
      if (ec != std::errc() || ptr != exp.data() + exp.size()) {
        throw ValidationError("bad exponent '" + std::string(exp) + "' in factorization");
      }
      pp.exponent = e;
    }
    factors.push_back(std::move(pp));
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return FactoredNat::from_factors(std::move(factors));
}

Nat euler_phi(const FactoredNat& f) {
  Nat phi = 1;
  for (const auto& pp : f.factors()) {
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
    phi *= power * (pp.prime - 1);
  }
  return phi;
}

template <typename Value>
BasicDivisorStream<Value>::BasicDivisorStream(std::vector<Value> primes, std::vector<unsigned> exponents)
    : primes_(std::move(primes)),
      exponents_(std::move(exponents)),
      counter_(primes_.size(), 0),
      partial_(primes_.size() + 1, Value(1)) {}

template <typename Value>
std::optional<Value> BasicDivisorStream<Value>::next() {
  if (done_) return std::nullopt;
  Value current = partial_[0];
  // Mixed-radix increment, least significant digit first.
  std::size_t k = 0;
  while (k < primes_.size() && counter_[k] == exponents_[k]) {
    counter_[k] = 0;
    ++k;
  }
  if (k == primes_.size()) {
    done_ = true;
  } else {
    ++counter_[k];
    partial_[k] = partial_[k] * primes_[k];
    for (std::size_t j = k; j-- > 0;) partial_[j] = partial_[k];
  }
  return current;
}

template class BasicDivisorStream<Nat>;
template class BasicDivisorStream<u64>;

DivisorStream divisors(const FactoredNat& f) {
  std::vector<Nat> primes;
  std::vector<unsigned> exps;
  for (const auto& pp : f.factors()) {
    primes.push_back(pp.prime);
    exps.push_back(pp.exponent);
  }
  return DivisorStream(std::move(primes), std::move(exps));
}

DivisorStreamU64 divisors_u64(const FactoredNat& f) {
  if (!fits_u64(f.value())) throw DomainError("divisors_u64: " + f.value().get_str() + " exceeds 64 bits");
  std::vector<u64> primes;
  std::vector<unsigned> exps;
  for (const auto& pp : f.factors()) {
    primes.push_back(nat_to_u64(pp.prime));
    exps.push_back(pp.exponent);
  }
  return DivisorStreamU64(std::move(primes), std::move(exps));
}

}  // namespace carmichael
