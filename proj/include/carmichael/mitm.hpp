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

// Meet-in-the-middle subset-product search.
//
// Given primes coprime to L and a unit target t mod L, finds every subset whose
// product is t mod L. The primes are split into blocks S1, S2, S3. Two side
// tables are built once: X holds t * e^{-1} for every subset product e of S1,
// Y holds f for every subset product f of S2. For each subset product d of S3
// (the sweep), d*f is looked up in X; a match is a triple (d, e, f) with
// d*e*f = t (mod L).

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carmichael/arith.hpp"
#include "carmichael/kernels.hpp"
#include "carmichael/pool.hpp"

namespace carmichael {

using u32 = std::uint32_t;
using SubsetMask = std::uint64_t;

constexpr std::size_t kMaxInstancePrimes = 63;
constexpr unsigned kMaxTableBits = 30;

// ---------------------------------------------------------------------------
// Partitioning

enum class PartitionKind {
  Balanced,      // deal indices round-robin into blocks with room left
  SortedPrefix,  // smallest a primes to S1, next b to S2, the rest to S3
  Qr5Filtered,   // quadratic residues mod 5 fill S1 and S2 first (ascending)
};

std::string_view to_string(PartitionKind kind);
PartitionKind partition_kind_from_string(std::string_view name);  // "balanced" | "sorted" | "qr5"

struct PartitionStrategy {
  PartitionKind kind = PartitionKind::SortedPrefix;
  /// Block sizes (|S1|, |S2|, |S3|); when absent the two tables take the
  /// largest sizes allowed by table_bits and S3 gets the remainder.
  std::optional<std::array<unsigned, 3>> sizes;
  unsigned table_bits = 20;
};

struct Partition {
  std::vector<unsigned> s1, s2, s3;  // indices into the instance's prime list, ascending

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Throws ValidationError when the sizes do not add up to primes.size().
Partition partition(std::span<const u64> primes, const PartitionStrategy& strategy);

// ---------------------------------------------------------------------------
// Instances and results

struct SubsetProductInstance {
  std::vector<u64> primes;
  u64 modulus = 1;
  u64 target = 1;
  Partition blocks;

  /// Checks sizes, coprimality, disjoint/exhaustive blocks and gcd(t, L) = 1.
  void validate() const;
  /// Stable identifier of the search problem (used by checkpoints).
  std::string digest() const;
};

struct SearchHit {
  SubsetMask subset = 0;  // bit i set iff primes[i] divides product
  Nat product;
  Nat d_part;  // from S3 (the sweep block)
  Nat e_part;  // from S1 (table X)
  Nat f_part;  // from S2 (table Y)

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct InstanceSummary {
  std::vector<u64> primes;
  u64 modulus = 1;
  u64 target = 1;
  std::array<unsigned, 3> block_sizes{};

  friend bool operator==(const InstanceSummary&, const InstanceSummary&) = default;
};

struct CensusResult {
  InstanceSummary instance;
  std::vector<SearchHit> hits;  // sorted by product, no duplicates
  std::size_t count = 0;
  double expected_log2 = 0;
  std::uint64_t sweep_divisors_skipped = 0;  // pruned by the residue-character test

  friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

struct SearchOptions {
  /// Subsets with fewer primes are not reported (2 keeps only composites).
  std::size_t min_subset_size = 2;
  std::size_t memory_budget_bytes = std::size_t{3} << 30;
  unsigned threads = 1;
  /// Skip sweep divisors whose quadratic character mod an odd prime q | L
  /// cannot match the target when all table primes are residues mod q.
  bool character_pruning = true;
  /// Append-only progress file; an existing file with the same digest resumes.
  std::optional<std::filesystem::path> checkpoint;
  const kernels::KernelTable* kernels = nullptr;  // nullptr: select_kernels()
  /// Called with (completed blocks, total blocks) after each sweep block.
  std::function<void(std::size_t, std::size_t)> progress;
};

SubsetProductInstance make_instance(std::vector<u64> primes, u64 modulus, u64 target,
                                    const PartitionStrategy& strategy);

// ---------------------------------------------------------------------------
// Side tables

enum class TableTransform { Identity, InverseTimesTarget };

/// Residues of all 2^|S| subset products of a block, indexed by local mask
/// (bit j of the mask selects the block's j-th prime), plus a residue-keyed
/// multimap that keeps every mask sharing a residue.
class SideTable {
 public:
  SideTable(std::span<const unsigned> block, std::span<const u64> primes, u64 modulus, TableTransform transform,
            u64 target, std::size_t memory_budget_bytes = std::size_t{3} << 30,
            const kernels::KernelTable* kernels = nullptr);

  std::size_t size() const { return residues_.size(); }
  std::span<const u64> residues() const { return residues_; }
  /// Local masks whose transformed residue equals r (empty when none).
  std::span<const u32> find(u64 r) const;
  /// Upper bound on the bytes a table for `block_size` primes would occupy.
  static std::size_t footprint(unsigned block_size);

  kernels::BitFilterView coarse_filter() const;
  kernels::BitFilterView fine_filter() const;

 private:
  std::vector<u64> residues_;
  // Multimap: masks grouped by residue, addressed through an open-addressing index.
  std::vector<u32> masks_by_residue_;
  struct Slot {
    u64 key;
    u32 begin;
    u32 count;  // 0 marks an empty slot
  };
  std::vector<Slot> index_;
  u64 index_mask_ = 0;
  std::vector<u32> coarse_bits_;
  unsigned coarse_log2_ = 5;
  std::vector<u32> fine_bits_;
  unsigned fine_log2_ = 5;
};

/// Expands a local block mask into a mask over the instance's primes.
SubsetMask expand_mask(std::span<const unsigned> block, SubsetMask local);

/// Builds a hit (products and parts) from a global mask.
SearchHit make_hit(const SubsetProductInstance& instance, SubsetMask subset);

// ---------------------------------------------------------------------------
// Search

/// Every subset with product = target (mod L) and at least
/// options.min_subset_size primes (never the empty subset), each exactly once.
CensusResult enumerate_hits(const SubsetProductInstance& instance, const SearchOptions& options = {});

/// C(m, L): composes prime_pool, partition and enumerate_hits with t = 1 and
/// re-verifies every product as a rigid Carmichael number of order m.
CensusResult census_rigid(unsigned m, const FactoredNat& modulus, const PartitionStrategy& strategy,
                          const SearchOptions& options = {});

struct BlockProbe {
  u64 d = 0;  // a single prime of S3
  std::size_t hit_count = 0;
  std::vector<SearchHit> hits;
};

/// For each prime of S3 alone as the sweep divisor, the hits it produces
/// (t = 1, rigid census setting). Avoids the full 2^|S3| sweep.
std::vector<BlockProbe> single_block_probe(unsigned m, const FactoredNat& modulus, const PartitionStrategy& strategy,
                                           const SearchOptions& options = {});

}  // namespace carmichael
