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
#include <atomic>
#include <bit>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "carmichael/checkpoint.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/mitm.hpp"

namespace carmichael {
namespace {

constexpr std::size_t kChunk = 4096;
constexpr unsigned kMaxSweepBits = 40;

int legendre(u64 a, u64 q) {
  a %= q;
  if (a == 0) return 0;
  return pow_mod_u64(a, (q - 1) / 2, q) == 1 ? 1 : -1;
}

struct CharacterConstraint {
  u64 q;
  int required;  // quadratic character the sweep divisor must have mod q
};

// If every table prime is a square mod an odd prime q | L, then e*f is a square
// mod q and d*e*f = t forces chi_q(d) = chi_q(t).
std::vector<CharacterConstraint> character_constraints(const SubsetProductInstance& inst) {
  std::vector<CharacterConstraint> out;
  u64 rest = inst.modulus;
  for (u64 q = 3; q < (1u << 16) && q <= rest; q += 2) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    if (!is_prime_u64(q)) continue;
    bool all_squares = true;
    for (const auto* block : {&inst.blocks.s1, &inst.blocks.s2}) {
      for (unsigned idx : *block) all_squares = all_squares && legendre(inst.primes[idx], q) == 1;
    }
    if (all_squares) out.push_back({q, legendre(inst.target, q)});
  }
  return out;
}

std::size_t effective_min_size(const SearchOptions& options) { return std::max<std::size_t>(1, options.min_subset_size); }

class SweepEngine {
 public:
  SweepEngine(const SubsetProductInstance& inst, const SearchOptions& options)
      : inst_(inst),
        kernels_(options.kernels ? *options.kernels : kernels::select_kernels()),
        min_size_(effective_min_size(options)) {
    const auto need = SideTable::footprint(static_cast<unsigned>(inst.blocks.s1.size())) +
                      SideTable::footprint(static_cast<unsigned>(inst.blocks.s2.size()));
    if (need > options.memory_budget_bytes) {
      throw BudgetError("side tables need " + std::to_string(need) + " bytes, over the budget of " +
                        std::to_string(options.memory_budget_bytes) + "; shrink the table blocks");
    }
    x_ = std::make_unique<SideTable>(inst.blocks.s1, inst.primes, inst.modulus, TableTransform::InverseTimesTarget,
                                     inst.target, options.memory_budget_bytes, &kernels_);
    y_ = std::make_unique<SideTable>(inst.blocks.s2, inst.primes, inst.modulus, TableTransform::Identity, 1,
                                     options.memory_budget_bytes, &kernels_);
  }

  u64 divisor_residue(SubsetMask local) const {
    u64 r = 1 % inst_.modulus;
    for (std::size_t j = 0; local != 0; ++j, local >>= 1) {
      if (local & 1) r = mul_mod_u64(r, inst_.primes[inst_.blocks.s3[j]] % inst_.modulus, inst_.modulus);
    }
    return r;
  }

  // Appends every (d, e, f) with d*e*f = t for this fixed d.
  void probe(u64 d_residue, SubsetMask d_global, std::vector<SubsetMask>& out) {
    const auto c = kernels::MulModConstant::make(d_residue, inst_.modulus);
    const auto coarse = x_->coarse_filter();
    const auto fine = x_->fine_filter();
    const auto ys = y_->residues();
    for (std::size_t start = 0; start < ys.size(); start += kChunk) {
      const std::size_t len = std::min(kChunk, ys.size() - start);
      const std::size_t n =
          kernels_.scale_and_filter(ys.subspan(start, len), c, coarse, index_buf_.data(), residue_buf_.data());
      for (std::size_t i = 0; i < n; ++i) {
        const u64 r = residue_buf_[i];
        if (!fine.test(r)) continue;
        const auto masks = x_->find(r);
        if (masks.empty()) continue;
        const SubsetMask df = d_global | expand_mask(inst_.blocks.s2, start + index_buf_[i]);
        for (u32 e : masks) {
          const SubsetMask global = df | expand_mask(inst_.blocks.s1, e);
          if (static_cast<std::size_t>(std::popcount(global)) >= min_size_) out.push_back(global);
        }
      }
    }
  }

 private:
  const SubsetProductInstance& inst_;
  const kernels::KernelTable& kernels_;
  std::size_t min_size_;
  std::unique_ptr<SideTable> x_, y_;
  std::array<u32, kChunk> index_buf_{};
  std::array<u64, kChunk> residue_buf_{};
};

double log2_phi_u64(u64 modulus) { return phi_log2(factor(nat_from_u64(modulus))); }

InstanceSummary summarize(const SubsetProductInstance& inst) {
  return {inst.primes, inst.modulus, inst.target,
          {static_cast<unsigned>(inst.blocks.s1.size()), static_cast<unsigned>(inst.blocks.s2.size()),
           static_cast<unsigned>(inst.blocks.s3.size())}};
}

std::vector<SearchHit> finalize_hits(const SubsetProductInstance& inst, std::vector<SubsetMask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<SearchHit> hits;
  hits.reserve(masks.size());
  const Nat modulus = nat_from_u64(inst.modulus);
  const Nat target = nat_from_u64(inst.target);
  for (SubsetMask m : masks) {
    SearchHit hit = make_hit(inst, m);
    if (hit.product % modulus != target) {
      throw InternalConsistencyError("hit " + hit.product.get_str() + " is not " + target.get_str() + " mod " +
                                     modulus.get_str());
    }
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) { return a.product < b.product; });
  return hits;
}

void require_rigid(const SearchHit& hit, const SubsetProductInstance& inst, unsigned m) {
  if (std::popcount(hit.subset) < 2) return;  // prime n (audit mode) is not a Carmichael candidate
  std::vector<Nat> primes;
  for (std::size_t i = 0; i < inst.primes.size(); ++i) {
    if (hit.subset >> i & 1) primes.push_back(nat_from_u64(inst.primes[i]));
  }
  const auto report = check_order(FactoredNat::from_primes(primes), m);
  if (report.verdict != Verdict::RigidCarmichaelOfOrder) {
    throw InternalConsistencyError("census product " + hit.product.get_str() + " is " +
                                   std::string(to_string(report.verdict)) + ", expected RigidCarmichaelOfOrder");
  }
}

}  // namespace

CensusResult enumerate_hits(const SubsetProductInstance& instance, const SearchOptions& options) {
  instance.validate();
  const auto sweep_bits = static_cast<unsigned>(instance.blocks.s3.size());
  if (sweep_bits > kMaxSweepBits) {
    throw BudgetError("sweep block of " + std::to_string(sweep_bits) + " primes is too large; enlarge the tables");
  }
  SweepEngine prototype(instance, options);

  const unsigned block_bits = sweep_bits > 10 ? sweep_bits - 10 : 0;
  const std::size_t total_blocks = std::size_t{1} << (sweep_bits - block_bits);
  const auto constraints = options.character_pruning ? character_constraints(instance) : std::vector<CharacterConstraint>{};

  std::unique_ptr<SweepCheckpoint> checkpoint;
  std::vector<SubsetMask> all;
  if (options.checkpoint) {
    checkpoint = std::make_unique<SweepCheckpoint>(*options.checkpoint, instance.digest(), total_blocks);
    all = checkpoint->restored_hits();
  }

  std::mutex mu;
  std::atomic<std::size_t> next_block{0};
  std::atomic<std::uint64_t> skipped{0};
  std::size_t completed = checkpoint ? checkpoint->completed_count() : 0;

  auto worker = [&](SweepEngine& engine) {
    std::vector<SubsetMask> local;
    for (std::size_t block = next_block++; block < total_blocks; block = next_block++) {
      if (checkpoint && checkpoint->completed(block)) continue;
      local.clear();
      const SubsetMask begin = SubsetMask{block} << block_bits;
      const SubsetMask end = begin + (SubsetMask{1} << block_bits);
      for (SubsetMask d = begin; d < end; ++d) {
        const u64 residue = engine.divisor_residue(d);
        const bool admissible = std::all_of(constraints.begin(), constraints.end(), [&](const CharacterConstraint& cc) {
          return legendre(residue, cc.q) == cc.required;
        });
        if (!admissible) {
          ++skipped;
          continue;
        }
        engine.probe(residue, expand_mask(instance.blocks.s3, d), local);
      }
      std::lock_guard lock(mu);
      all.insert(all.end(), local.begin(), local.end());
      if (checkpoint) checkpoint->record(block, local);
      ++completed;
      if (options.progress) options.progress(completed, total_blocks);
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker(prototype);
  } else {
    // Each worker owns its scratch buffers; the side tables are rebuilt per
    // worker only for the extra threads.
    std::vector<std::unique_ptr<SweepEngine>> engines;
    std::vector<std::jthread> pool;  // joined before the engines are destroyed
    for (unsigned i = 1; i < threads; ++i) engines.push_back(std::make_unique<SweepEngine>(instance, options));
    for (auto& e : engines) pool.emplace_back([&worker, &e] { worker(*e); });
    worker(prototype);
  }

  CensusResult result;
  result.instance = summarize(instance);
  result.hits = finalize_hits(instance, std::move(all));
  result.count = result.hits.size();
  result.expected_log2 = static_cast<double>(instance.primes.size()) - log2_phi_u64(instance.modulus);
  result.sweep_divisors_skipped = skipped.load();
  return result;
}

CensusResult census_rigid(unsigned m, const FactoredNat& modulus, const PartitionStrategy& strategy,
                          const SearchOptions& options) {
  const PrimePool pool = prime_pool(m, modulus);
  const u64 L = nat_to_u64(modulus.value());
  const auto instance = make_instance(pool.primes, L, 1 % L, strategy);
  CensusResult result = enumerate_hits(instance, options);
  for (const auto& hit : result.hits) require_rigid(hit, instance, m);
  result.expected_log2 = fecundity(modulus, m).fecundity;
  return result;
}

std::vector<BlockProbe> single_block_probe(unsigned m, const FactoredNat& modulus, const PartitionStrategy& strategy,
                                           const SearchOptions& options) {
  const PrimePool pool = prime_pool(m, modulus);
  const u64 L = nat_to_u64(modulus.value());
  const auto instance = make_instance(pool.primes, L, 1 % L, strategy);
  SweepEngine engine(instance, options);
  std::vector<BlockProbe> out;
  for (std::size_t j = 0; j < instance.blocks.s3.size(); ++j) {
    const SubsetMask d_local = SubsetMask{1} << j;
    std::vector<SubsetMask> masks;
    engine.probe(engine.divisor_residue(d_local), expand_mask(instance.blocks.s3, d_local), masks);
    BlockProbe probe;
    probe.d = instance.primes[instance.blocks.s3[j]];
    probe.hits = finalize_hits(instance, std::move(masks));
    for (const auto& hit : probe.hits) require_rigid(hit, instance, m);
    probe.hit_count = probe.hits.size();
    out.push_back(std::move(probe));
  }
  return out;
}

}  // namespace carmichael
