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

#include <cstdlib>
#include <string>

#include "carmichael/errors.hpp"
#include "carmichael/kernels.hpp"

namespace carmichael::kernels {

MulModConstant MulModConstant::make(u64 w, u64 modulus) {
  if (modulus == 0 || modulus >= (u64{1} << 63)) {
    throw DomainError("mul-mod constant: modulus must be in [1, 2^63), got " + std::to_string(modulus));
  }
  MulModConstant c;
  c.w = w % modulus;
  c.w_shoup = static_cast<u64>((static_cast<unsigned __int128>(c.w) << 64) / modulus);
  c.modulus = modulus;
  return c;
}

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "?";
}

namespace {

void scale_mod_scalar(std::span<const u64> in, const MulModConstant& c, std::span<u64> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = mul_mod_shoup(in[i], c);
}

std::size_t scale_and_filter_scalar(std::span<const u64> ys, const MulModConstant& c, const BitFilterView& filter,
                                    u32* out_index, u64* out_residue) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
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

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, &scale_mod_scalar, &scale_and_filter_scalar};
  return table;
}

#if defined(CARMICHAEL_HAVE_AVX2)
const KernelTable& avx2_kernel_table();  // avx2.cpp
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(CARMICHAEL_HAVE_AVX2)
  if (cpu_has_avx2()) return &avx2_kernel_table();
#endif
  return nullptr;
}

const KernelTable& select_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("CARMICHAEL_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelTable* avx2 = avx2_kernels()) return avx2;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace carmichael::kernels
