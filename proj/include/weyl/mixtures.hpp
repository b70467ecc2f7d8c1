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

// Convex combinations of isotropic Weyl semigroups sharing one profile.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "weyl/classify.hpp"
#include "weyl/dynamics.hpp"
#include "weyl/phase_space.hpp"

namespace weyl {

struct MixtureComponent {
  double weight = 0.0;
  SubgroupHNF group;
};

/// sum_k x_k E_iso^{(k)}(t), each component isotropic over G_k with the
/// shared profile. Components must be pairwise distinct as element sets.
class MixtureSpec {
 public:
  MixtureSpec(int d, std::vector<MixtureComponent> components, ProbabilityProfile profile);

  int d() const { return d_; }
  const std::vector<MixtureComponent>& components() const { return components_; }
  const ProbabilityProfile& profile() const { return profile_; }
  size_t size() const { return components_.size(); }

  /// True when every |G_k| equals the same K.
  bool has_common_order() const;
  /// The common order K; throws when the orders differ.
  long common_order() const;
  /// Common order K and p(t) = (K-1)/K (1 - e^{-ct}): every component is a
  /// Markovian semigroup and the closed forms below apply.
  bool semigroup_mode() const;

  /// The same mixture as a single-profile Weyl map.
  WeylDynamics dynamics() const;

 private:
  int d_;
  std::vector<MixtureComponent> components_;
  ProbabilityProfile profile_;
};

/// Weights of the mixture at time t: 1 - p(t) at the identity and
/// p(t) sum_k x_k [u in G_k \ {0}] / (|G_k| - 1) elsewhere.
WeylMapSpec effective_weights(const MixtureSpec& mix, double t);

/// X_u = sum_k x_k [u in G_k^perp].
double dual_multiplicity(const MixtureSpec& mix, const PhasePoint& u);

/// lambda_u(t) = X_u + (1 - X_u) e^{-ct}. Semigroup mode only.
double mixture_eigenvalue(const MixtureSpec& mix, const PhasePoint& u, double t);

struct CoverageReport {
  /// S = union of G_k \ {0}.
  std::vector<PhasePoint> covered;
  /// Nonzero points outside S.
  std::vector<PhasePoint> uncovered;
  /// S_int = union over i != j of G_i^perp cap G_j^perp (contains 0 once N >= 2).
  std::vector<PhasePoint> dual_intersections;
  /// X_u by single index.
  std::vector<double> multiplicity;

  double x(const PhasePoint& u) const { return multiplicity[static_cast<size_t>(u.index())]; }
};

CoverageReport coverage_report(const MixtureSpec& mix);

/// Upper bound min{(d^2 - 1)/(K - 1), count_subgroups(d, K)} on the number
/// of mixed semigroups for which the mixture is guaranteed ENM, and the
/// admissible integers 2 <= N < bound (empty when n_max < n_min).
struct MixtureBound {
  double bound = 0.0;
  int n_min = 2;
  int n_max = 1;

  bool empty() const { return n_max < n_min; }
};

MixtureBound enm_mixture_bound(int d, long order);

/// f(x) = c x / (x + (1 - x) e^{-ct}).
double overlap_function(double x, double rate, double t);

/// Closed-form decay rate of a semigroup-mode mixture at channel alpha != 0:
///   d^2 gamma = c + sum_k f(x_k) s_k(alpha) - sum_{u in S_int \ {0}} omega^{-alpha ^ u} M(u, t)
/// with s_k = |G_k^perp| - 1 for alpha in G_k and -1 otherwise, and the
/// overlap gap M(u, t) = sum_k f(x_k) [u in G_k^perp] - f(X_u).
/// Throws InvalidArgument outside semigroup mode (use decay_rates instead).
double mixture_rate_closed_form(const MixtureSpec& mix, const PhasePoint& alpha, double t);

/// All closed-form rates at t.
RateTable mixture_rates_closed_form(const MixtureSpec& mix, double t);

/// sum_i f(x_i) - f(sum_i x_i) >= 0.
double subadditivity_gap(std::span<const double> xs, double rate, double t);

/// d = 3 generalized Pauli channel with probabilities q_0..q_4 as a Weyl
/// map: q_0 at 0 and q_k / 2 on each of the two nonzero points of the k-th
/// order-3 subgroup, single indices {1,2}, {3,6}, {4,8}, {5,7}.
WeylMapSpec gp_embedding_d3(const std::array<double, 5>& q);

/// Samples `samples` weight vectors uniformly in the L2 ball of `radius`
/// around the uniform mixture (within the simplex) and counts how many stay
/// CP-divisible on `grid`.
struct NeighbourhoodProbe {
  int samples = 0;
  int markovian = 0;
  double radius = 0.0;
};

NeighbourhoodProbe probe_uniform_neighbourhood(const MixtureSpec& uniform, double radius,
                                               int samples, std::uint64_t seed,
                                               std::span<const double> grid,
                                               double tol = kDefaultRateTolerance);

}  // namespace weyl
