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

// AVX2 variants of the search kernels. Four 64-bit lanes per vector; the
// 64x64-bit products are assembled from _mm256_mul_epu32 partial products.
// This translation unit is the only one compiled with -mavx2.

#include <immintrin.h>

#include "carmichael/kernels.hpp"

namespace carmichael::kernels {
namespace {

struct BroadcastConstant {
  __m256i w, w_hi, ws, ws_hi, modulus, modulus_hi;

  explicit BroadcastConstant(const MulModConstant& c)
      : w(_mm256_set1_epi64x(static_cast<long long>(c.w))),
        w_hi(_mm256_set1_epi64x(static_cast<long long>(c.w >> 32))),
        ws(_mm256_set1_epi64x(static_cast<long long>(c.w_shoup))),
        ws_hi(_mm256_set1_epi64x(static_cast<long long>(c.w_shoup >> 32))),
        modulus(_mm256_set1_epi64x(static_cast<long long>(c.modulus))),
        modulus_hi(_mm256_set1_epi64x(static_cast<long long>(c.modulus >> 32))) {}
};

inline __m256i mulhi_u64(__m256i a, __m256i a_hi, __m256i b, __m256i b_hi) {
  const __m256i lo32 = _mm256_set1_epi64x(0xffffffffLL);
  const __m256i ll = _mm256_mul_epu32(a, b);
  const __m256i lh = _mm256_mul_epu32(a, b_hi);
  const __m256i hl = _mm256_mul_epu32(a_hi, b);
  const __m256i hh = _mm256_mul_epu32(a_hi, b_hi);
  __m256i mid = _mm256_add_epi64(_mm256_srli_epi64(ll, 32), _mm256_and_si256(lh, lo32));
  mid = _mm256_add_epi64(mid, _mm256_and_si256(hl, lo32));
  __m256i hi = _mm256_add_epi64(hh, _mm256_srli_epi64(lh, 32));
  hi = _mm256_add_epi64(hi, _mm256_srli_epi64(hl, 32));
  return _mm256_add_epi64(hi, _mm256_srli_epi64(mid, 32));
}

inline __m256i mullo_u64(__m256i a, __m256i a_hi, __m256i b, __m256i b_hi) {
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
  return _mm256_add_epi64(_mm256_mul_epu32(a, b), _mm256_slli_epi64(cross, 32));
}

inline __m256i mul_mod_shoup4(__m256i y, const BroadcastConstant& c) {
  const __m256i y_hi = _mm256_srli_epi64(y, 32);
  const __m256i q = mulhi_u64(y, y_hi, c.ws, c.ws_hi);
  const __m256i q_hi = _mm256_srli_epi64(q, 32);
  const __m256i r = _mm256_sub_epi64(mullo_u64(y, y_hi, c.w, c.w_hi), mullo_u64(q, q_hi, c.modulus, c.modulus_hi));
  // r in [0, 2L) with L < 2^63, so r - L is negative as a signed value iff r < L.
  const __m256i t = _mm256_sub_epi64(r, c.modulus);
  const __m256i keep_r = _mm256_cmpgt_epi64(_mm256_setzero_si256(), t);
  return _mm256_blendv_epi8(t, r, keep_r);
}

void scale_mod_avx2(std::span<const u64> in, const MulModConstant& c, std::span<u64> out) {
  const BroadcastConstant bc(c);
  std::size_t i = 0;
  for (; i + 4 <= in.size(); i += 4) {
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), mul_mod_shoup4(y, bc));
  }
  for (; i < in.size(); ++i) out[i] = mul_mod_shoup(in[i], c);
}

// Returns a 4-bit lane mask of residues whose filter bit is set.
inline int filter4(__m256i r, const BitFilterView& filter, __m256i multiplier, __m128i shift, __m256i pack) {
  const __m256i folded = _mm256_xor_si256(r, _mm256_srli_epi64(r, 32));
  const __m256i hashed = _mm256_srl_epi32(_mm256_mullo_epi32(folded, multiplier), shift);
  // Even 32-bit lanes hold the slots; gather them into the low half.
  const __m128i slots = _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(hashed, pack));
  const __m128i word_index = _mm_srli_epi32(slots, 5);
  const __m128i words = _mm_i32gather_epi32(reinterpret_cast<const int*>(filter.words), word_index, 4);
  const __m128i bit = _mm_and_si128(slots, _mm_set1_epi32(31));
  const __m128i hit = _mm_slli_epi32(_mm_srlv_epi32(words, bit), 31);
  return _mm_movemask_ps(_mm_castsi128_ps(hit));
}

std::size_t scale_and_filter_avx2(std::span<const u64> ys, const MulModConstant& c, const BitFilterView& filter,
                                  u32* out_index, u64* out_residue) {
  const BroadcastConstant bc(c);
  const __m256i multiplier = _mm256_set1_epi32(static_cast<int>(filter.hash_multiplier));
  const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(32 - filter.log2_bits));
  const __m256i pack = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  alignas(32) u64 lanes[8];
  std::size_t n = 0;
  std::size_t i = 0;
  for (; i + 8 <= ys.size(); i += 8) {
    const __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys.data() + i));
    const __m256i y1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys.data() + i + 4));
    const __m256i r0 = mul_mod_shoup4(y0, bc);
    const __m256i r1 = mul_mod_shoup4(y1, bc);
    const int mask = filter4(r0, filter, multiplier, shift, pack) | (filter4(r1, filter, multiplier, shift, pack) << 4);
    if (mask == 0) continue;
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), r0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), r1);
    for (int bits = mask; bits != 0; bits &= bits - 1) {
      const int lane = __builtin_ctz(static_cast<unsigned>(bits));
      out_index[n] = static_cast<u32>(i + static_cast<std::size_t>(lane));
      out_residue[n] = lanes[lane];
      ++n;
    }
  }
  for (; i < ys.size(); ++i) {
    const u64 r = mul_mod_shoup(ys[i], c);
    if (filter.test(r)) {
      out_index[n] = static_cast<u32>(i);
      out_residue[n] = r;
      ++n;
    }
  }
  return n;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{Isa::Avx2, &scale_mod_avx2, &scale_and_filter_avx2};
  return table;
}

}  // namespace carmichael::kernels
