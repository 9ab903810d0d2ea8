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

// Append-only log of search and census runs, one JSON line per run.

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "carmichael/json_io.hpp"

namespace carmichael {

struct RunRecord {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string started;   // UTC, ISO 8601
  std::string finished;  // UTC, ISO 8601
  Json summary = Json::object();
  std::string version;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

void to_json(Json& j, const RunRecord& v);
void from_json(const Json& j, RunRecord& v);

std::string utc_timestamp(std::chrono::system_clock::time_point t = std::chrono::system_clock::now());

/// The toolkit version compiled into the library.
std::string toolkit_version();

/// Appends one line and flushes; creates the file when missing.
void append_run_record(const std::filesystem::path& path, const RunRecord& record);

/// Reads every complete record; a torn final line is skipped.
std::vector<RunRecord> read_run_log(const std::filesystem::path& path);

}  // namespace carmichael
