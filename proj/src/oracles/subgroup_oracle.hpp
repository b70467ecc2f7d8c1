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

// Brute-force reference for the subgroup algebra. Nothing here uses Hermite
// normal forms: subgroups are closed element sets generated by point pairs.

#include <map>
#include <set>
#include <vector>

#include "weyl/phase_space.hpp"

namespace weyl::oracle {

using ElementSet = std::vector<PhasePoint>;  // sorted

/// <u, v> = {a u + b v}. Every subgroup of Z_d x Z_d has rank <= 2, so the
/// span of all pairs reaches every subgroup.
ElementSet span_of(const PhasePoint& u, const PhasePoint& v);

/// Every subgroup of Z_d x Z_d as an element set, sorted.
std::set<ElementSet> all_subgroups_serial(int d);
std::set<ElementSet> all_subgroups(int d);

/// Number of subgroups per order.
std::map<long, long> subgroup_counts(int d);

/// {v : u ^ v = 0 for every u in the set}, by direct scan.
ElementSet dual_by_scan(const ElementSet& g, int d);

/// Smallest k >= 1 with k u = 0.
int cyclic_order_by_iteration(const PhasePoint& u);

}  // namespace weyl::oracle
