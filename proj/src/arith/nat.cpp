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

#include <cctype>
#include <string>
#include <utility>

#include "carmichael/arith.hpp"

static_assert(sizeof(unsigned long) == 8, "GMP ui conversions assume a 64-bit unsigned long");

namespace carmichael {

Nat nat_from_u64(u64 v) {
  Nat r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

bool fits_u64(const Nat& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

u64 nat_to_u64(const Nat& v) {
  if (!fits_u64(v)) throw DomainError("value " + v.get_str() + " does not fit in 64 bits");
  return static_cast<u64>(mpz_get_ui(v.get_mpz_t()));
}

Nat parse_nat(std::string_view decimal) {
  if (decimal.empty()) throw ValidationError("empty natural number");
  for (char c : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("not a decimal natural number: '" + std::string(decimal) + "'");
    }
  }
  return Nat(std::string(decimal), 10);
}

std::string to_decimal(const Nat& v) { return v.get_str(10); }

u64 pow_mod_u64(u64 base, u64 exponent, u64 modulus) {
  if (modulus == 0) throw DomainError("pow_mod: modulus must be >= 1");
  if (modulus == 1) return 0;
  u64 result = 1;
  base %= modulus;
  while (exponent) {
    if (exponent & 1) result = mul_mod_u64(result, base, modulus);
    base = mul_mod_u64(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 mod_inverse_u64(u64 a, u64 m) {
  if (m == 0) throw DomainError("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit to avoid overflow for moduli near 2^64.
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    throw NotInvertibleError("mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  __int128 result = old_s % static_cast<__int128>(m);
  if (result < 0) result += m;
  return static_cast<u64>(result);
}

Nat mod_pow(const Nat& base, const Nat& exponent, const Nat& modulus) {
  if (sgn(modulus) <= 0) throw DomainError("mod_pow: modulus must be >= 1");
  if (sgn(exponent) < 0) throw DomainError("mod_pow: exponent must be >= 0");
  if (modulus == 1) return 0;
  Nat b = base % modulus;
  if (sgn(b) < 0) b += modulus;
  Nat result = 1;
  const mpz_srcptr e = exponent.get_mpz_t();
  for (long bit = static_cast<long>(mpz_sizeinbase(e, 2)) - 1; bit >= 0; --bit) {
    result = result * result % modulus;
    if (mpz_tstbit(e, static_cast<mp_bitcnt_t>(bit))) result = result * b % modulus;
  }
  return result;
}

Nat gcd(const Nat& a, const Nat& b) {
  Nat g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Nat lcm(const Nat& a, const Nat& b) {
  Nat l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

IntegerSqrt isqrt(const Nat& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of a negative number");
  Nat root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  return {root, rem == 0};
}

Nat mod_inverse(const Nat& a, const Nat& m) {
  if (sgn(m) <= 0) throw DomainError("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  // Extended Euclid.
  Nat old_r = a % m, r = m, old_s = 1, s = 0;
  if (sgn(old_r) < 0) old_r += m;
  while (r != 0) {
    Nat q = old_r / r;
    Nat tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotInvertibleError("mod_inverse: " + a.get_str() + " is not invertible mod " + m.get_str() +
                             " (gcd " + old_r.get_str() + ")");
  }
  Nat result = old_s % m;
  if (sgn(result) < 0) result += m;
  return result;
}

Residue::Residue(Nat value, Nat modulus) : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ < 1) throw ValidationError("residue modulus must be >= 1, got " + modulus_.get_str());
  if (sgn(value_) < 0 || value_ >= modulus_) {
    throw ValidationError("residue value " + value_.get_str() + " not in [0, " + modulus_.get_str() + ")");
  }
}

Residue Residue::reduce(const Nat& value, const Nat& modulus) {
  if (modulus < 1) throw ValidationError("residue modulus must be >= 1, got " + modulus.get_str());
  Nat r = value % modulus;
  if (sgn(r) < 0) r += modulus;
  return Residue(r, modulus);
}

void Residue::require_machine_width() const {
  if (mpz_sizeinbase(modulus_.get_mpz_t(), 2) > 63) {
    throw ValidationError("modulus " + modulus_.get_str() + " must be below 2^63");
  }
}

Residue crt_combine(const Residue& a, const Residue& b) {
  const Nat& m1 = a.modulus();
  const Nat& m2 = b.modulus();
  Nat g = gcd(m1, m2);
  Nat diff = b.value() - a.value();
  if (diff % g != 0) {
    throw CrtInconsistentError("CRT inconsistent: " + a.value().get_str() + " mod " + m1.get_str() + " and " +
                               b.value().get_str() + " mod " + m2.get_str() + " disagree modulo gcd " + g.get_str());
  }
  Nat m2g = m2 / g;
  Nat l = m1 * m2g;
  Nat k = (diff / g) % m2g;
  if (sgn(k) < 0) k += m2g;
  k = k * mod_inverse(Nat(m1 / g), m2g) % m2g;
  return Residue::reduce(a.value() + m1 * k, l);
}

}  // namespace carmichael
