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

// Named end-to-end checks of the published numbers: each runs the pipeline
// from the fixture moduli and compares against the fixture values.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "carmichael/json_io.hpp"

namespace carmichael {

struct ReproduceTarget {
  std::string name;
  bool long_running = false;
};

const std::vector<ReproduceTarget>& reproduce_targets();

struct ReproduceOptions {
  unsigned threads = 1;
  bool allow_long = false;
};

struct ReproduceOutcome {
  std::string target;
  bool passed = false;
  Json observed;
  Json expected;
  double seconds = 0;
};

/// ValidationError for an unknown name; BudgetError for a long-running target
/// without allow_long.
ReproduceOutcome reproduce(std::string_view target, const ReproduceOptions& options = {});

void to_json(Json& j, const ReproduceOutcome& v);

}  // namespace carmichael
