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

#include "oracle/poly.hpp"

namespace carmichael::detail {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t degree(const Poly& a) { return a.empty() ? 0 : a.size() - 1; }

bool is_zero(const Poly& a) {
  for (const auto& c : a) {
    if (c != 0) return false;
  }
  return true;
}

Poly add(const Poly& a, const Poly& b, const Nat& N) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
    if (out[i] >= N) out[i] -= N;
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, const Nat& N) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
    if (out[i] < 0) out[i] += N;
  }
  trim(out);
  return out;
}

Poly reduce(Poly a, const Poly& f, const Nat& N) {
  trim(a);
  const std::size_t d = f.size() - 1;
  Nat t;
  while (a.size() > d) {
    const Nat lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i < d; ++i) {
      t = lead * f[i];
      a[shift + i] -= t;
      mpz_mod(a[shift + i].get_mpz_t(), a[shift + i].get_mpz_t(), N.get_mpz_t());
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, const Nat& N) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (auto& c : prod) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), N.get_mpz_t());
  return reduce(std::move(prod), f, N);
}

Poly pow_mod(const Poly& a, const Nat& e, const Poly& f, const Nat& N) {
  Poly result = reduce(Poly{Nat(1) % N}, f, N);
  const Poly base = reduce(a, f, N);
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0 && e > 0; --bit) {
    result = mul_mod(result, result, f, N);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mul_mod(result, base, f, N);
  }
  return result;
}

namespace {

Poly make_monic(Poly a, const Nat& p) {
  trim(a);
  if (a.empty()) return a;
  const Nat inv = mod_inverse(a.back(), p);
  for (auto& c : a) c = (c * inv) % p;
  return a;
}

}  // namespace

Poly gcd_field(Poly a, Poly b, const Nat& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = reduce(a, make_monic(b, p), p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Poly pad(Poly a, std::size_t d) {
  a.resize(d, 0);
  return a;
}

Poly random_element(gmp_randclass& rng, const Nat& N, std::size_t d) {
  Poly out(d);
  for (auto& c : out) c = rng.get_z_range(N);
  return out;
}

bool refutes(const Poly& x, const Poly& y, const Nat& n, const Poly& f, const Nat& N) {
  const Poly lhs = pow_mod(add(x, y, N), n, f, N);
  const Poly rhs = add(pow_mod(x, n, f, N), pow_mod(y, n, f, N), N);
  Poly a = lhs, b = rhs;
  trim(a);
  trim(b);
  return a != b;
}

std::string poly_to_string(const Poly& f) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || f[i] != 1) out += f[i].get_str();
    if (i > 0 && f[i] != 1) out += "*";
    if (i == 1) out += "x";
    if (i > 1) out += "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace carmichael::detail
