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


#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/kernels.hpp"

using namespace carmichael;
using namespace carmichael::kernels;

namespace {

u64 random_modulus(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return rng() % 1000 + 2;
    case 1:
      return (rng() >> 1) | (u64{1} << 62);  // just below 2^63
    case 2:
      return (u64{1} << 63) - 1;
    default:
      return (rng() >> (rng() % 61 + 2)) + 2;
  }
}

void check_against(const KernelTable& k, std::mt19937_64& rng) {
  const KernelTable& ref = scalar_kernels();
  for (int round = 0; round < 400; ++round) {
    const u64 L = random_modulus(rng);
    const MulModConstant c = MulModConstant::make(rng() % L, L);
    const std::size_t n = round < 70 ? static_cast<std::size_t>(round) : rng() % 1000;
    std::vector<u64> in(n);
    for (auto& v : in) v = rng() % L;

    std::vector<u64> a(n), b(n);
    ref.scale_mod(in, c, a);
    k.scale_mod(in, c, b);
    REQUIRE(a == b);
    std::vector<u64> inplace = in;
    k.scale_mod(inplace, c, inplace);
    REQUIRE(inplace == a);

    const unsigned log2_bits = 5 + static_cast<unsigned>(rng() % 10);
    std::vector<u32> words((std::size_t{1} << log2_bits) / 32);
    for (auto& w : words) w = static_cast<u32>(rng()) & static_cast<u32>(rng());
    const BitFilterView filter{words.data(), log2_bits, 0x9E3779B1u};
    std::vector<u32> ia(n), ib(n);
    std::vector<u64> ra(n), rb(n);
    const std::size_t na = ref.scale_and_filter(in, c, filter, ia.data(), ra.data());
    const std::size_t nb = k.scale_and_filter(in, c, filter, ib.data(), rb.data());
    REQUIRE(na == nb);
    for (std::size_t i = 0; i < na; ++i) {
      REQUIRE(ia[i] == ib[i]);
      REQUIRE(ra[i] == rb[i]);
      REQUIRE(filter.test(ra[i]));
    }
  }
}

}  // namespace

TEST_CASE("Shoup multiplication matches 128-bit reduction") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100000; ++i) {
    const u64 L = random_modulus(rng);
    const u64 w = rng() % L;
    const u64 y = rng() % L;
    REQUIRE(mul_mod_shoup(y, MulModConstant::make(w, L)) == mul_mod_u64(y, w, L));
  }
}

TEST_CASE("scalar kernels follow their contract") {
  std::mt19937_64 rng(2);
  const KernelTable& k = scalar_kernels();
  CHECK(k.isa == Isa::Scalar);
  for (int round = 0; round < 50; ++round) {
    const u64 L = random_modulus(rng);
    const MulModConstant c = MulModConstant::make(rng() % L, L);
    std::vector<u64> in(rng() % 200);
    for (auto& v : in) v = rng() % L;
    std::vector<u64> out(in.size());
    k.scale_mod(in, c, out);
    for (std::size_t i = 0; i < in.size(); ++i) REQUIRE(out[i] == mul_mod_u64(in[i], c.w, L));

    std::vector<u32> words(4, 0);
    const BitFilterView filter{words.data(), 7, 0x9E3779B1u};
    for (std::size_t i = 0; i < out.size(); i += 3) {
      const u32 s = filter.slot(out[i]);
      words[s >> 5] |= 1u << (s & 31);
    }
    std::vector<u32> idx(in.size());
    std::vector<u64> res(in.size());
    const std::size_t n = k.scale_and_filter(in, c, filter, idx.data(), res.data());
    std::size_t expected = 0;
    for (std::size_t i = 0; i < out.size(); ++i) expected += filter.test(out[i]);
    CHECK(n == expected);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(idx[i] < idx[i + 1]);
  }
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
  const KernelTable* avx2 = avx2_kernels();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 variant unavailable on this build or CPU; equivalence not exercised");
    CHECK(select_kernels().isa == Isa::Scalar);
    return;
  }
  CHECK(avx2->isa == Isa::Avx2);
  std::mt19937_64 rng(3);
  check_against(*avx2, rng);
}

TEST_CASE("kernel selection") {
  const char* forced = std::getenv("CARMICHAEL_KERNELS");
  const bool want_scalar = avx2_kernels() == nullptr || (forced != nullptr && std::string_view(forced) == "scalar");
  CHECK(select_kernels().isa == (want_scalar ? Isa::Scalar : Isa::Avx2));
  CHECK(to_string(Isa::Scalar) == "scalar");
  CHECK(to_string(Isa::Avx2) == "avx2");
}
