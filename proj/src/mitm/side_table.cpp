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

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "carmichael/mitm.hpp"

namespace carmichael {
namespace {

constexpr u32 kCoarseMultiplier = 0x9E3779B1u;
constexpr u32 kFineMultiplier = 0x85EBCA77u;

unsigned ceil_log2(std::size_t n) { return n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1)); }

unsigned coarse_bits_for(std::size_t n) { return std::clamp(ceil_log2(n) + 4, 10u, 24u); }
unsigned fine_bits_for(std::size_t n) { return std::clamp(ceil_log2(n) + 7, 12u, 27u); }

std::size_t index_capacity_for(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(2, 2 * n)); }

inline u64 index_hash(u64 r, unsigned shift) { return (r * 0x9E3779B97F4A7C15ULL) >> shift; }

}  // namespace

std::size_t SideTable::footprint(unsigned block_size) {
  const std::size_t n = std::size_t{1} << block_size;
  return n * sizeof(u64) + n * sizeof(u32) + n * sizeof(std::pair<u64, u32>) +
         index_capacity_for(n) * sizeof(Slot) + (std::size_t{1} << coarse_bits_for(n)) / 8 +
         (std::size_t{1} << fine_bits_for(n)) / 8;
}

SideTable::SideTable(std::span<const unsigned> block, std::span<const u64> primes, u64 modulus,
                     TableTransform transform, u64 target, std::size_t memory_budget_bytes,
                     const kernels::KernelTable* kernel_table) {
  if (block.size() > kMaxTableBits) {
    throw ValidationError("side table block of " + std::to_string(block.size()) + " primes exceeds 2^" +
                          std::to_string(kMaxTableBits) + " entries");
  }
  const auto bits = static_cast<unsigned>(block.size());
  if (footprint(bits) > memory_budget_bytes) {
    throw BudgetError("side table for " + std::to_string(bits) + " primes needs " + std::to_string(footprint(bits)) +
                      " bytes, over the budget of " + std::to_string(memory_budget_bytes));
  }
  const kernels::KernelTable& k = kernel_table ? *kernel_table : kernels::select_kernels();
  const std::size_t n = std::size_t{1} << bits;
  residues_.resize(n);
  residues_[0] = (transform == TableTransform::Identity ? 1 : target) % modulus;
  // Doubling: the subsets containing prime j are those without it, times p_j.
  for (unsigned j = 0; j < bits; ++j) {
    const u64 p = primes[block[j]] % modulus;
    const u64 w = transform == TableTransform::Identity ? p : mod_inverse_u64(p, modulus);
    const auto c = kernels::MulModConstant::make(w, modulus);
    const std::size_t half = std::size_t{1} << j;
    k.scale_mod(std::span<const u64>(residues_.data(), half), c, std::span<u64>(residues_.data() + half, half));
  }

  std::vector<std::pair<u64, u32>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {residues_[i], static_cast<u32>(i)};
  std::sort(pairs.begin(), pairs.end());

  index_.assign(index_capacity_for(n), Slot{0, 0, 0});
  index_mask_ = index_.size() - 1;
  const unsigned shift = 64 - static_cast<unsigned>(std::countr_zero(index_.size()));
  masks_by_residue_.resize(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && pairs[j].first == pairs[i].first) {
      masks_by_residue_[j] = pairs[j].second;
      ++j;
    }
    u64 slot = index_.size() == 1 ? 0 : index_hash(pairs[i].first, shift);
    while (index_[slot].count != 0) slot = (slot + 1) & index_mask_;
    index_[slot] = Slot{pairs[i].first, static_cast<u32>(i), static_cast<u32>(j - i)};
    i = j;
  }

  coarse_log2_ = coarse_bits_for(n);
  fine_log2_ = fine_bits_for(n);
  coarse_bits_.assign((std::size_t{1} << coarse_log2_) / 32, 0);
  fine_bits_.assign((std::size_t{1} << fine_log2_) / 32, 0);
  const auto coarse = coarse_filter();
  const auto fine = fine_filter();
  for (u64 r : residues_) {
    const u32 a = coarse.slot(r);
    coarse_bits_[a >> 5] |= 1u << (a & 31);
    const u32 b = fine.slot(r);
    fine_bits_[b >> 5] |= 1u << (b & 31);
  }
}

std::span<const u32> SideTable::find(u64 r) const {
  const unsigned shift = 64 - static_cast<unsigned>(std::countr_zero(index_.size()));
  u64 slot = index_hash(r, shift);
  while (index_[slot].count != 0) {
    if (index_[slot].key == r) return {masks_by_residue_.data() + index_[slot].begin, index_[slot].count};
    slot = (slot + 1) & index_mask_;
  }
  return {};
}

kernels::BitFilterView SideTable::coarse_filter() const {
  return {coarse_bits_.data(), coarse_log2_, kCoarseMultiplier};
}

kernels::BitFilterView SideTable::fine_filter() const { return {fine_bits_.data(), fine_log2_, kFineMultiplier}; }

}  // namespace carmichael
