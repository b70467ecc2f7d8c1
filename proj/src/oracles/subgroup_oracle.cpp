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

#include "oracles/subgroup_oracle.hpp"

#include <algorithm>

#include "weyl/errors.hpp"

namespace weyl::oracle {

ElementSet span_of(const PhasePoint& u, const PhasePoint& v) {
  const int d = u.d;
  std::vector<char> seen(static_cast<size_t>(d) * d, 0);
  PhasePoint a = PhasePoint::make(0, 0, d);
  for (int x = 0; x < d; ++x) {
    PhasePoint b = a;
    for (int y = 0; y < d; ++y) {
      seen[static_cast<size_t>(b.index())] = 1;
      b = b + v;
    }
    a = a + u;
  }
  ElementSet out;
  for (int k = 0; k < d * d; ++k) {
    if (seen[static_cast<size_t>(k)]) out.push_back(PhasePoint::from_index(k, d));
  }
  return out;  // from_index order is (i, j) lexicographic
}

std::set<ElementSet> all_subgroups_serial(int d) {
  if (d < 2) throw InvalidArgument("d must be >= 2");
  const int d2 = d * d;
  std::set<ElementSet> out;
  for (int a = 0; a < d2; ++a) {
    for (int b = a; b < d2; ++b) {
      out.insert(span_of(PhasePoint::from_index(a, d), PhasePoint::from_index(b, d)));
    }
  }
  return out;
}

std::set<ElementSet> all_subgroups(int d) {
  if (d < 2) throw InvalidArgument("d must be >= 2");
  const int d2 = d * d;
  std::vector<std::set<ElementSet>> per_row(static_cast<size_t>(d2));
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a < d2; ++a) {
    for (int b = a; b < d2; ++b) {
      per_row[static_cast<size_t>(a)].insert(span_of(PhasePoint::from_index(a, d), PhasePoint::from_index(b, d)));
    }
  }
  std::set<ElementSet> out;
  for (auto& s : per_row) out.merge(s);
  return out;
}

std::map<long, long> subgroup_counts(int d) {
  std::map<long, long> counts;
  for (const auto& g : all_subgroups(d)) ++counts[static_cast<long>(g.size())];
  return counts;
}

ElementSet dual_by_scan(const ElementSet& g, int d) {
  ElementSet out;
  for (int k = 0; k < d * d; ++k) {
    const PhasePoint v = PhasePoint::from_index(k, d);
    const bool orthogonal = std::all_of(g.begin(), g.end(), [&](const PhasePoint& u) {
      // Written out rather than calling symplectic_product.
      return ((static_cast<long>(u.j) * v.i - static_cast<long>(u.i) * v.j) % d + d) % d == 0;
    });
    if (orthogonal) out.push_back(v);
  }
  return out;
}

int cyclic_order_by_iteration(const PhasePoint& u) {
  if (u.is_zero()) throw InvalidArgument("cyclic order of 0 is undefined");
  PhasePoint x = u;
  int k = 1;
  while (!x.is_zero()) {
    x = x + u;
    ++k;
  }
  return k;
}

}  // namespace weyl::oracle
