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

#include "carmichael/run_log.hpp"

#include <ctime>
#include <fstream>

namespace carmichael {

void to_json(Json& j, const RunRecord& v) {
  j = Json{{"record", "run"},          {"command", v.command}, {"parameters", v.parameters},
           {"started", v.started},     {"finished", v.finished}, {"summary", v.summary},
           {"version", v.version}};
}

void from_json(const Json& j, RunRecord& v) {
  v.command = j.at("command").get<std::string>();
  v.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  v.started = j.at("started").get<std::string>();
  v.finished = j.at("finished").get<std::string>();
  v.summary = j.at("summary");
  v.version = j.at("version").get<std::string>();
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm utc{};
  gmtime_r(&secs, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string toolkit_version() { return CARMICHAEL_VERSION; }

void append_run_record(const std::filesystem::path& path, const RunRecord& record) {
  bool needs_newline = false;
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    std::ifstream in(path, std::ios::binary);
    in.seekg(-1, std::ios::end);
    needs_newline = in.get() != '\n';
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open run log " + path.string());
  if (needs_newline) out << '\n';
  out << to_json_line(record) << '\n';
  out.flush();
  if (!out) throw Error("cannot write run log " + path.string());
}

std::vector<RunRecord> read_run_log(const std::filesystem::path& path) {
  std::vector<RunRecord> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(Json::parse(line).get<RunRecord>());
    } catch (const nlohmann::json::exception&) {
      continue;
    }
  }
  return out;
}

}  // namespace carmichael
