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

// JSON and CSV interchange: subgroups, Weyl maps, profiles, mixtures,
// verdicts and rate traces.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "weyl/classify.hpp"
#include "weyl/dynamics.hpp"
#include "weyl/mixtures.hpp"
#include "weyl/phase_space.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl::io {

using Json = nlohmann::ordered_json;

Json to_json(const SubgroupHNF& h);
SubgroupHNF subgroup_from_json(const Json& j);

/// Sorted [[i, j], ...].
Json elements_to_json(std::span<const PhasePoint> points);
PhasePoint point_from_json(const Json& j, int d);

/// Nested rows of [re, im] pairs.
Json to_json(const CMatrix& a);
CMatrix matrix_from_json(const Json& j);

/// {"d": d, "weights": [{"i", "j", "p"}, ...]}, zero weights omitted.
Json to_json(const WeylMapSpec& spec);
WeylMapSpec weyl_map_from_json(const Json& j);

/// {"r", "c"} or {"samples": [[t, p], ...]}; the string "zero" is p == 0.
Json to_json(const ProbabilityProfile& p);
ProbabilityProfile profile_from_json(const Json& j);

/// {"d", "profile", "components": [{"x", "G"}, ...]}.
Json to_json(const MixtureSpec& mix);
MixtureSpec mixture_from_json(const Json& j);

/// {"verdict", "witness": {...} | null, "window": [t1, T]}.
Json to_json(const MarkovVerdict& v);

/// A dynamical map read from one of four shapes, each carrying "profile":
///   {"d", "components": [...]}          mixture of isotropic semigroups
///   {"subgroup": {...HNF...}}           isotropic map over G
///   {"d", "dephasing": [i, j]}          dephasing along u
///   {"d", "weights": [...]}             generic direction W
struct DynamicSpec {
  std::string kind;
  WeylDynamics dynamics;
  std::optional<MixtureSpec> mixture;
};

DynamicSpec dynamic_spec_from_json(const Json& j);

/// Parses `arg` as inline JSON when it starts with '{', else reads the file.
/// Throws InvalidArgument on I/O or syntax errors.
Json load_json_argument(const std::string& arg);

/// Header t,gamma_0,...,gamma_{d^2-1}; 12 significant digits.
std::string rates_csv(std::span<const RateTable> tables);

/// %.12g with negative zero printed as 0.
std::string format_number(double x);

}  // namespace weyl::io
