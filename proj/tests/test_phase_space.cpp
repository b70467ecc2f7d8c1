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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "oracles/subgroup_oracle.hpp"
#include "weyl/errors.hpp"
#include "weyl/phase_space.hpp"

using namespace weyl;

namespace {

PhasePoint P(int i, int j, int d) { return PhasePoint::make(i, j, d); }

SubgroupHNF generated(int d, std::initializer_list<PhasePoint> gens) {
  std::vector<PhasePoint> g(gens);
  return canonicalize(d, g);
}

}  // namespace

TEST_CASE("points reduce mod d and index as d*i + j") {
  const auto u = PhasePoint::make(-1, 7, 3);
  CHECK(u.i == 2);
  CHECK(u.j == 1);
  CHECK(u.index() == 7);
  CHECK(PhasePoint::from_index(7, 3) == u);
  CHECK((u + u) == P(1, 2, 3));
  CHECK((u + -u).is_zero());
  CHECK((4L * u) == u);
}

TEST_CASE("symplectic product") {
  CHECK(symplectic_product(P(1, 0, 3), P(0, 1, 3)) == 2);
  CHECK(symplectic_product(P(1, 1, 3), P(1, 2, 3)) == 2);
  for (int a = 0; a < 16; ++a) {
    const auto u = PhasePoint::from_index(a, 4);
    CHECK(symplectic_product(u, u) == 0);
    for (int b = 0; b < 16; ++b) {
      const auto v = PhasePoint::from_index(b, 4);
      CHECK((symplectic_product(u, v) + symplectic_product(v, u)) % 4 == 0);
    }
  }
  CHECK_THROWS_AS(symplectic_product(P(1, 0, 3), P(1, 0, 4)), InvalidArgument);
}

TEST_CASE("HNF validity") {
  CHECK(hnf_validate(4, 1, 1, 2));
  CHECK_FALSE(hnf_validate(4, 1, 1, 3));
  CHECK(hnf_validate(6, 2, 1, 3));
  CHECK_FALSE(hnf_validate(4, 1, 2, 2));  // w must be < n
  CHECK_FALSE(hnf_validate(4, 2, 1, 4));  // 4 does not divide 1*4/2
  CHECK_THROWS_AS(make_subgroup(4, 1, 1, 3), InvalidArgument);
  // d=6, (2,1,3) is closed under addition.
  const auto g = subgroup_elements(make_subgroup(6, 2, 1, 3));
  CHECK(g.size() == 6);
  for (const auto& a : g)
    for (const auto& b : g) CHECK(std::binary_search(g.begin(), g.end(), a + b));
}

TEST_CASE("subgroup elements") {
  CHECK(subgroup_elements(make_subgroup(3, 3, 0, 3)) == std::vector<PhasePoint>{P(0, 0, 3)});
  const auto h = subgroup_elements(make_subgroup(4, 1, 1, 2));
  CHECK(h.size() == 8);
  for (const auto& p : {P(1, 1, 4), P(0, 2, 4), P(2, 2, 4)}) CHECK(std::binary_search(h.begin(), h.end(), p));
  CHECK(subgroup_elements(make_subgroup(3, 1, 0, 3)) ==
        std::vector<PhasePoint>{P(0, 0, 3), P(1, 0, 3), P(2, 0, 3)});
  CHECK(std::is_sorted(h.begin(), h.end()));
}

TEST_CASE("element sets match their HNF order and membership") {
  for (int d = 2; d <= 8; ++d) {
    for (long k : divisors(long{d} * d)) {
      for (const auto& g : enumerate_subgroups(d, k)) {
        const auto e = subgroup_elements(g);
        REQUIRE(static_cast<long>(e.size()) == g.order());
        for (int a = 0; a < d * d; ++a) {
          const auto u = PhasePoint::from_index(a, d);
          CHECK(g.contains(u) == std::binary_search(e.begin(), e.end(), u));
        }
      }
    }
  }
}

TEST_CASE("subgroup types") {
  auto t = classify_subgroup(make_subgroup(3, 1, 0, 3));
  CHECK(t.kind == SubgroupKind::Cyclic);
  CHECK(t.nu == 3);
  t = classify_subgroup(make_subgroup(4, 1, 1, 2));
  CHECK(t.kind == SubgroupKind::NonSplitRank2);
  CHECK(t.nu == 4);
  t = classify_subgroup(make_subgroup(4, 2, 0, 2));
  CHECK(t.kind == SubgroupKind::SplitRank2);
  CHECK(to_string(SubgroupKind::Cyclic) == "cyclic");
  // Every valid triple lands in one of the three types.
  for (int d = 2; d <= 12; ++d)
    for (long k : divisors(long{d} * d))
      for (const auto& g : enumerate_subgroups(d, k)) CHECK_NOTHROW(classify_subgroup(g));
}

TEST_CASE("2Z4 x 2Z4 is not generated by one element") {
  const auto target = subgroup_elements(make_subgroup(4, 2, 0, 2));
  for (const auto& u : target) {
    if (u.is_zero()) continue;
    CHECK(oracle::span_of(u, u) != target);
  }
}

TEST_CASE("canonicalize recovers the HNF of generated subgroups") {
  CHECK(generated(4, {P(1, 1, 4), P(0, 2, 4)}) == make_subgroup(4, 1, 1, 2));
  CHECK(generated(3, {P(1, 0, 3)}) == make_subgroup(3, 1, 0, 3));
  CHECK(generated(5, {}) == trivial_group(5));
  CHECK(generated(6, {P(1, 0, 6), P(0, 1, 6)}) == full_group(6));
  for (int d = 2; d <= 9; ++d) {
    for (int a = 0; a < d * d; a += 2) {
      for (int b = 0; b < d * d; b += 3) {
        const auto u = PhasePoint::from_index(a, d), v = PhasePoint::from_index(b, d);
        CHECK(subgroup_elements(generated(d, {u, v})) == oracle::span_of(u, v));
      }
    }
  }
}

TEST_CASE("symplectic dual") {
  const auto g = make_subgroup(3, 1, 0, 3);
  CHECK(dual_subgroup(g) == g);
  CHECK(dual_subgroup(trivial_group(5)) == full_group(5));
  CHECK(dual_subgroup(full_group(5)) == trivial_group(5));
  const auto h = generated(4, {P(1, 1, 4), P(0, 2, 4)});
  const auto dh = dual_subgroup(h);
  CHECK(dh.order() == 2);
  CHECK(subgroup_elements(dh) == oracle::dual_by_scan(subgroup_elements(h), 4));
}

TEST_CASE("enumeration and counting") {
  const auto four = enumerate_subgroups(3, 3);
  REQUIRE(four.size() == 4);
  std::set<std::vector<PhasePoint>> expect;
  for (const auto& u : {P(1, 0, 3), P(0, 1, 3), P(1, 1, 3), P(1, 2, 3)}) expect.insert(oracle::span_of(u, u));
  std::set<std::vector<PhasePoint>> got;
  for (const auto& g : four) got.insert(subgroup_elements(g));
  CHECK(got == expect);

  CHECK(enumerate_subgroups(2, 4).size() == 1);
  CHECK(enumerate_subgroups(4, 4).size() == 7);
  CHECK(oracle::subgroup_counts(4)[4] == 7);
  CHECK(count_subgroups(3, 3) == 4);
  CHECK(count_subgroups(12, 12) == 28);
  CHECK(sigma1(12) == 28);
  for (int d = 2; d <= 10; ++d) {
    CHECK(count_subgroups(d, 1) == 1);
    CHECK(count_subgroups(d, long{d} * d) == 1);
  }
  CHECK_THROWS_AS(count_subgroups(4, 5), InvalidArgument);
  CHECK_THROWS_AS(enumerate_subgroups(4, 5), InvalidArgument);
}

TEST_CASE("brute-force enumeration agrees in serial and parallel") {
  for (int d = 2; d <= 6; ++d) CHECK(oracle::all_subgroups(d) == oracle::all_subgroups_serial(d));
}

TEST_CASE("cyclic order") {
  CHECK(cyclic_order(P(1, 0, 3)) == 3);
  CHECK(cyclic_order(P(2, 2, 4)) == 2);
  CHECK(cyclic_order(P(2, 4, 6)) == 3);
  for (int d = 2; d <= 12; ++d)
    for (int a = 1; a < d * d; ++a) {
      const auto u = PhasePoint::from_index(a, d);
      CHECK(cyclic_order(u) == oracle::cyclic_order_by_iteration(u));
    }
  CHECK_THROWS_AS(cyclic_order(P(0, 0, 5)), InvalidArgument);
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(sigma1(30) == 72);
}
