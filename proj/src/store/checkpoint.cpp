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

#include "carmichael/checkpoint.hpp"

#include <json.hpp>

#include "carmichael/errors.hpp"

namespace carmichael {
namespace {

constexpr const char* kFormat = "carmichael-sweep-checkpoint";
constexpr int kVersion = 1;

}  // namespace

SweepCheckpoint::SweepCheckpoint(std::filesystem::path path, std::string digest, std::size_t total_blocks)
    : path_(std::move(path)) {
  bool fresh = true;
  if (std::filesystem::exists(path_) && std::filesystem::file_size(path_) > 0) {
    fresh = false;
    std::ifstream in(path_);
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("checkpoint " + path_.string() + " is unreadable");
    nlohmann::json header;
    try {
      header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw ValidationError("checkpoint " + path_.string() + " has a malformed header");
    }
    if (header.value("format", "") != kFormat || header.value("version", 0) != kVersion) {
      throw ValidationError("checkpoint " + path_.string() + " is not a sweep checkpoint");
    }
    if (header.value("digest", "") != digest || header.value("blocks", std::size_t{0}) != total_blocks) {
      throw ValidationError("checkpoint " + path_.string() + " belongs to a different instance (digest " +
                            header.value("digest", "?") + ", expected " + digest + ")");
    }
    while (std::getline(in, line)) {
      nlohmann::json rec;
      try {
        rec = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        continue;  // torn write from an interrupted run
      }
      const auto block = rec.at("block").get<std::size_t>();
      if (!done_.insert(block).second) continue;
      for (const auto& h : rec.at("hits")) restored_.push_back(std::stoull(h.get<std::string>()));
    }
  }
  bool needs_newline = false;
  if (!fresh) {
    std::ifstream tail(path_, std::ios::binary);
    tail.seekg(-1, std::ios::end);
    needs_newline = tail.get() != '\n';
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw ValidationError("cannot open checkpoint " + path_.string() + " for appending");
  if (needs_newline) out_ << '\n';
  if (fresh) {
    nlohmann::json header{{"format", kFormat}, {"version", kVersion}, {"digest", digest}, {"blocks", total_blocks}};
    out_ << header.dump() << '\n' << std::flush;
  }
}

void SweepCheckpoint::record(std::size_t block, std::span<const std::uint64_t> hits) {
  nlohmann::json rec{{"block", block}, {"hits", nlohmann::json::array()}};
  for (auto h : hits) rec["hits"].push_back(std::to_string(h));
  out_ << rec.dump() << '\n' << std::flush;
  done_.insert(block);
}

}  // namespace carmichael
