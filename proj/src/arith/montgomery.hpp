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

#pragma once

#include <cstdint>

namespace carmichael::detail {

// Montgomery arithmetic modulo an odd 64-bit n, R = 2^64.
// Values are kept in [0, n).
class Montgomery64 {
 public:
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;

  explicit Montgomery64(u64 n) : n_(n) {
    u64 inv = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % n);
    r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % n);
  }

  u64 modulus() const { return n_; }

  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * neg_inv_;
    u128 s = t + static_cast<u128>(m) * n_;
    // t < n^2 < 2^128 but t + m*n may carry past 2^128 when n > 2^63.
    bool carry = s < t;
    u64 r = static_cast<u64>(s >> 64);
    if (carry || r >= n_) r -= n_;
    return r;
  }

  u64 to(u64 a) const { return mul(a % n_, r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 one() const { return to(1); }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    if (s < a || s >= n_) s -= n_;
    return s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n_ - b); }

  u64 pow(u64 base_m, u64 e) const {
    u64 result = one();
    while (e) {
      if (e & 1) result = mul(result, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return result;
  }

 private:
  u64 n_;
  u64 neg_inv_;
  u64 r2_;
};

}  // namespace carmichael::detail
