// Copyright 2026 The weylmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// End-to-end acceptance checks. Each criterion is self-contained, seeded
// from Options::seed, and reports measured against expected values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weyl::acceptance {

struct Criterion {
  int id;
  const char* name;
  const char* summary;
};

const std::vector<Criterion>& criteria();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  /// Comma-separated names or ids; empty runs everything.
  std::string filter;
  std::uint64_t seed = 42;
  /// Replaces every agreement tolerance when set.
  std::optional<double> tolerance;
};

/// True when `filter` selects the criterion.
bool selected(const Criterion& c, const std::string& filter);

std::vector<CriterionResult> run(const Options& opts);

/// "[PASS] 3 spectrum-oracle: detail"
std::string format(const CriterionResult& r);

}  // namespace weyl::acceptance
