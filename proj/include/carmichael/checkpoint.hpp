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

// Append-only checkpoint for long sweeps: a header line naming the instance
// digest and block count, then one JSON line per completed sweep block with the
// subset masks it produced. A torn final line is ignored on resume.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace carmichael {

class SweepCheckpoint {
 public:
  /// Opens or creates `path`. Throws ValidationError when an existing file was
  /// written for a different instance digest or block count.
  SweepCheckpoint(std::filesystem::path path, std::string digest, std::size_t total_blocks);

  bool completed(std::size_t block) const { return done_.contains(block); }
  std::size_t completed_count() const { return done_.size(); }
  const std::vector<std::uint64_t>& restored_hits() const { return restored_; }

  /// Appends and flushes one completed block.
  void record(std::size_t block, std::span<const std::uint64_t> hits);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::unordered_set<std::size_t> done_;
  std::vector<std::uint64_t> restored_;
};

}  // namespace carmichael
