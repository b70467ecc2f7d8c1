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

// Exact integer arithmetic on the discrete phase space Z_d x Z_d: points,
// the symplectic form, and subgroups in Hermite normal form.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weyl {

/// An element (i, j) of Z_d x Z_d. Indexes the Weyl operator U_{ij}.
struct PhasePoint {
  int i = 0;
  int j = 0;
  int d = 2;

  /// Builds a point, reducing both coordinates into [0, d).
  static PhasePoint make(long i, long j, int d);
  /// Inverse of single_index(): alpha = d*i + j.
  static PhasePoint from_index(int alpha, int d);

  int index() const { return d * i + j; }
  bool is_zero() const { return i == 0 && j == 0; }

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
  friend auto operator<=>(const PhasePoint& a, const PhasePoint& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }
};

PhasePoint operator+(const PhasePoint& u, const PhasePoint& v);
PhasePoint operator-(const PhasePoint& u);
PhasePoint operator*(long k, const PhasePoint& u);

/// u ^ v = (j_u i_v - i_u j_v) mod d, in [0, d). Throws on dimension mismatch.
int symplectic_product(const PhasePoint& u, const PhasePoint& v);

/// Order of the cyclic subgroup <u>: d / gcd(i, j, d). Throws for u = 0.
int cyclic_order(const PhasePoint& u);

/// A subgroup of Z_d x Z_d given by the rows (m, w), (0, n) of its Hermite
/// normal form. Only constructible through make_subgroup() and the
/// enumeration/canonicalisation routines, so every instance is valid.
class SubgroupHNF {
 public:
  int d() const { return d_; }
  int m() const { return m_; }
  int w() const { return w_; }
  int n() const { return n_; }
  /// |G| = d^2 / (m n).
  long order() const;
  bool contains(const PhasePoint& u) const;

  friend bool operator==(const SubgroupHNF&, const SubgroupHNF&) = default;
  friend auto operator<=>(const SubgroupHNF&, const SubgroupHNF&) = default;

 private:
  friend SubgroupHNF make_subgroup(int d, int m, int w, int n);
  SubgroupHNF(int d, int m, int w, int n) : d_(d), m_(m), w_(w), n_(n) {}
  int d_, m_, w_, n_;
};

/// m | d, n | d, 0 <= w < n and n | (w d / m).
bool hnf_validate(int d, int m, int w, int n);

/// Validating constructor; throws InvalidArgument.
SubgroupHNF make_subgroup(int d, int m, int w, int n);

/// The full group Z_d x Z_d and the trivial subgroup {0}.
SubgroupHNF full_group(int d);
SubgroupHNF trivial_group(int d);

/// {(m u, w u + n v) mod d}, sorted lexicographically by (i, j).
std::vector<PhasePoint> subgroup_elements(const SubgroupHNF& h);

enum class SubgroupKind { Cyclic, SplitRank2, NonSplitRank2 };

struct SubgroupType {
  SubgroupKind kind;
  /// Redundancy threshold nu = gcd(w d / m, d).
  long nu;
};

std::string to_string(SubgroupKind kind);

/// Cyclic when n == nu, else split when w == 0 and n < d, else non-split when
/// w != 0 and n < nu. Anything else raises ClassificationError.
SubgroupType classify_subgroup(const SubgroupHNF& h);

/// HNF of the subgroup generated by an arbitrary set of points.
SubgroupHNF canonicalize(int d, std::span<const PhasePoint> generators);

/// Symplectic dual G^perp = {v : u ^ v = 0 for all u in G}.
SubgroupHNF dual_subgroup(const SubgroupHNF& h);

/// Every subgroup of order K, ordered by (m, w). Throws unless K | d^2.
std::vector<SubgroupHNF> enumerate_subgroups(int d, long order);

/// Number of subgroups of order K: sum over (m, n) of gcd(n, d/m).
long count_subgroups(int d, long order);

/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

/// Sum of divisors of n.
long sigma1(long n);

}  // namespace weyl
