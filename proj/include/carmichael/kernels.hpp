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

// Data-parallel inner loops of the subset-product search.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant; select_kernels() picks one at runtime from the CPU's features.
// Variants must produce bit-identical output.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace carmichael::kernels {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Multiplication by a fixed w modulo L < 2^63 (Shoup): with
/// w_shoup = floor(w * 2^64 / L), q = hi64(y * w_shoup) leaves
/// y*w - q*L in [0, 2L) for any y < L.
struct MulModConstant {
  u64 w = 0;
  u64 w_shoup = 0;
  u64 modulus = 1;

  static MulModConstant make(u64 w, u64 modulus);
};

inline u64 mul_mod_shoup(u64 y, const MulModConstant& c) {
  const u64 q = static_cast<u64>((static_cast<unsigned __int128>(y) * c.w_shoup) >> 64);
  u64 r = y * c.w - q * c.modulus;
  return r >= c.modulus ? r - c.modulus : r;
}

/// Approximate-membership bitmap over residues: bit h(r) is set for every
/// member r. Lookups never miss a member; non-members pass with probability
/// about (members / 2^log2_bits).
struct BitFilterView {
  const u32* words = nullptr;
  unsigned log2_bits = 5;  // 5..32
  u32 hash_multiplier = 0x9E3779B1u;

  u32 slot(u64 r) const {
    const u32 folded = static_cast<u32>(r) ^ static_cast<u32>(r >> 32);
    return (folded * hash_multiplier) >> (32 - log2_bits);
  }
  bool test(u64 r) const {
    const u32 s = slot(r);
    return (words[s >> 5] >> (s & 31)) & 1u;
  }
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;

  /// out[i] = in[i] * c.w mod c.modulus. in and out may alias exactly.
  void (*scale_mod)(std::span<const u64> in, const MulModConstant& c, std::span<u64> out);

  /// For each i, computes r = ys[i] * c.w mod c.modulus; when filter.test(r)
  /// appends i to out_index and r to out_residue (both sized >= ys.size()).
  /// Returns the number of candidates, in increasing index order.
  std::size_t (*scale_and_filter)(std::span<const u64> ys, const MulModConstant& c, const BitFilterView& filter,
                                  u32* out_index, u64* out_residue);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

/// The fastest variant available; CARMICHAEL_KERNELS=scalar forces the reference path.
const KernelTable& select_kernels();

}  // namespace carmichael::kernels
