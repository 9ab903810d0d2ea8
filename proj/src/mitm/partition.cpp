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
#include <cstdio>
#include <numeric>
#include <string>

#include "carmichael/mitm.hpp"

namespace carmichael {

std::string_view to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Balanced:
      return "balanced";
    case PartitionKind::SortedPrefix:
      return "sorted";
    case PartitionKind::Qr5Filtered:
      return "qr5";
  }
  return "?";
}

PartitionKind partition_kind_from_string(std::string_view name) {
  if (name == "balanced") return PartitionKind::Balanced;
  if (name == "sorted" || name == "sorted_prefix") return PartitionKind::SortedPrefix;
  if (name == "qr5" || name == "qr5_filtered") return PartitionKind::Qr5Filtered;
  throw ValidationError("unknown partition strategy '" + std::string(name) + "' (balanced|sorted|qr5)");
}

namespace {

std::array<unsigned, 3> default_sizes(std::size_t n, unsigned table_bits) {
  const auto count = static_cast<unsigned>(n);
  const unsigned a = std::min(table_bits, (count + 1) / 2);
  const unsigned b = std::min(table_bits, count - a);
  return {a, b, count - a - b};
}

}  // namespace

Partition partition(std::span<const u64> primes, const PartitionStrategy& strategy) {
  if (strategy.table_bits > kMaxTableBits) {
    throw ValidationError("table size limit is 2^" + std::to_string(kMaxTableBits));
  }
  const auto sizes = strategy.sizes.value_or(default_sizes(primes.size(), strategy.table_bits));
  if (std::size_t{sizes[0]} + sizes[1] + sizes[2] != primes.size()) {
    throw ValidationError("partition sizes " + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
                          std::to_string(sizes[2]) + " do not add up to " + std::to_string(primes.size()) + " primes");
  }

  std::vector<unsigned> order(primes.size());
  std::iota(order.begin(), order.end(), 0u);
  Partition out;
  switch (strategy.kind) {
    case PartitionKind::Balanced: {
      std::array<std::vector<unsigned>*, 3> blocks{&out.s1, &out.s2, &out.s3};
      std::size_t next = 0;
      for (unsigned idx : order) {
        while (blocks[next % 3]->size() >= sizes[next % 3]) ++next;
        blocks[next % 3]->push_back(idx);
        ++next;
      }
      break;
    }
    case PartitionKind::SortedPrefix:
    case PartitionKind::Qr5Filtered: {
      std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return primes[a] < primes[b]; });
      if (strategy.kind == PartitionKind::Qr5Filtered) {
        // Residues mod 5 first; when there are too few, non-residues fill the remaining table slots.
        std::stable_partition(order.begin(), order.end(), [&](unsigned i) {
          const u64 r = primes[i] % 5;
          return r == 1 || r == 4;
        });
      }
      out.s1.assign(order.begin(), order.begin() + sizes[0]);
      out.s2.assign(order.begin() + sizes[0], order.begin() + sizes[0] + sizes[1]);
      out.s3.assign(order.begin() + sizes[0] + sizes[1], order.end());
      break;
    }
  }
  std::sort(out.s1.begin(), out.s1.end());
  std::sort(out.s2.begin(), out.s2.end());
  std::sort(out.s3.begin(), out.s3.end());
  return out;
}

SubsetProductInstance make_instance(std::vector<u64> primes, u64 modulus, u64 target,
                                    const PartitionStrategy& strategy) {
  SubsetProductInstance inst;
  inst.blocks = partition(primes, strategy);
  inst.primes = std::move(primes);
  inst.modulus = modulus;
  inst.target = modulus == 0 ? target : target % modulus;
  inst.validate();
  return inst;
}

void SubsetProductInstance::validate() const {
  if (primes.size() > kMaxInstancePrimes) {
    throw ValidationError("at most " + std::to_string(kMaxInstancePrimes) + " primes per instance, got " +
                          std::to_string(primes.size()));
  }
  if (modulus == 0 || modulus >= (u64{1} << 63)) {
    throw ValidationError("modulus " + std::to_string(modulus) + " must be in [1, 2^63)");
  }
  if (target >= modulus) {
    throw ValidationError("target " + std::to_string(target) + " must be reduced mod " + std::to_string(modulus));
  }
  if (gcd_u64(target, modulus) != 1) {
    throw ValidationError("target " + std::to_string(target) + " is not a unit mod " + std::to_string(modulus) +
                          "; subset products of coprime primes never reach it");
  }
  for (u64 p : primes) {
    if (!is_prime_u64(p)) throw ValidationError(std::to_string(p) + " is not prime");
    if (gcd_u64(p, modulus) != 1) {
      throw ValidationError("prime " + std::to_string(p) + " is not coprime to " + std::to_string(modulus));
    }
  }
  if (blocks.s1.size() > kMaxTableBits || blocks.s2.size() > kMaxTableBits) {
    throw ValidationError("table blocks are limited to " + std::to_string(kMaxTableBits) + " primes");
  }
  std::vector<int> seen(primes.size(), 0);
  for (const auto* block : {&blocks.s1, &blocks.s2, &blocks.s3}) {
    for (unsigned idx : *block) {
      if (idx >= primes.size()) throw ValidationError("partition index out of range");
      if (seen[idx]++) throw ValidationError("partition blocks overlap at index " + std::to_string(idx));
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ValidationError("partition blocks do not cover every prime");
  }
}

std::string SubsetProductInstance::digest() const {
  // FNV-1a over a canonical rendering of the problem.
  std::string canon = "L=" + std::to_string(modulus) + ";t=" + std::to_string(target) + ";p=";
  for (u64 p : primes) canon += std::to_string(p) + ",";
  for (const auto* block : {&blocks.s1, &blocks.s2, &blocks.s3}) {
    canon += ";";
    for (unsigned idx : *block) canon += std::to_string(idx) + ",";
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SubsetMask expand_mask(std::span<const unsigned> block, SubsetMask local) {
  SubsetMask global = 0;
  for (std::size_t j = 0; local != 0; ++j, local >>= 1) {
    if (local & 1) global |= SubsetMask{1} << block[j];
  }
  return global;
}

SearchHit make_hit(const SubsetProductInstance& instance, SubsetMask subset) {
  SearchHit hit;
  hit.subset = subset;
  hit.product = 1;
  hit.d_part = 1;
  hit.e_part = 1;
  hit.f_part = 1;
  auto accumulate = [&](const std::vector<unsigned>& block, Nat& part) {
    for (unsigned idx : block) {
      if (subset >> idx & 1) part *= nat_from_u64(instance.primes[idx]);
    }
  };
  accumulate(instance.blocks.s3, hit.d_part);
  accumulate(instance.blocks.s1, hit.e_part);
  accumulate(instance.blocks.s2, hit.f_part);
  hit.product = hit.d_part * hit.e_part * hit.f_part;
  return hit;
}

}  // namespace carmichael
