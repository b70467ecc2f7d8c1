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

// Markovianity verdicts from decay-rate signs: semigroup tests,
// CP-divisibility and eternal non-Markovianity on a time grid, and the
// closed-form predicates for dephasing maps.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weyl/dynamics.hpp"
#include "weyl/phase_space.hpp"

namespace weyl {

enum class Verdict { MarkovianSemigroup, CPDivisible, NonMarkovian, EternallyNonMarkovian };

std::string to_string(Verdict v);

struct Witness {
  PhasePoint alpha;
  double t = 0.0;
  double gamma = 0.0;
};

struct MarkovVerdict {
  Verdict verdict = Verdict::CPDivisible;
  std::optional<Witness> witness;
  /// Sampled window [t1, T]; grid verdicts certify nothing outside it.
  double window_start = 0.0;
  double window_end = 0.0;

  bool is_markovian() const {
    return verdict == Verdict::MarkovianSemigroup || verdict == Verdict::CPDivisible;
  }
};

inline constexpr double kDefaultRateTolerance = 1e-12;

/// True iff the profile is exponential with r = (|G|-1)/|G| (within 1e-12).
bool check_semigroup_form(const SubgroupHNF& group, const ProbabilityProfile& profile);

/// max |S(t+s) - S(t) S(s)| over superoperator entries.
double semigroup_residual(const WeylDynamics& dyn, double t, double s);

/// For weights w_u on G \ {0} (W in `weights`, zero at the identity):
/// beta_v = 1 - sum_u w_u omega^{u ^ v}. Returns two points whose nonzero
/// beta values differ by more than 1e-10, or nothing when at most one
/// nontrivial value exists.
std::optional<std::pair<PhasePoint, PhasePoint>> anisotropic_obstruction(const WeylMapSpec& weights);

/// CPDivisible when every gamma >= -tol on the grid, upgraded to
/// MarkovianSemigroup when each channel is constant to within tol; otherwise
/// NonMarkovian with the first violation (earliest t, then smallest alpha).
MarkovVerdict cp_divisible_on_grid(const RateSource& rates, std::span<const double> grid,
                                   double tol = kDefaultRateTolerance);

/// EternallyNonMarkovian when some channel is < -tol at every grid point and
/// |gamma(1e-9)| < 1e-8; the witness names the first such channel.
/// Otherwise returns the cp_divisible_on_grid verdict. Needs grid[0] > 0.
MarkovVerdict enm_on_grid(const RateSource& rates, std::span<const double> grid,
                          double tol = kDefaultRateTolerance);

/// Grid verdict from precomputed tables (times taken from the tables).
/// `zero_limit` is the table at t -> 0+, used only for the ENM test.
MarkovVerdict classify_tables(std::span<const RateTable> tables, const RateTable* zero_limit,
                              double tol = kDefaultRateTolerance);

/// Closed-form ENM test for a dephasing map with p = r (1 - e^{-ct}):
/// l = cyclic_order(u) odd and >= 3, or l even, >= 4 and r <= 1/2.
bool enm_dephasing_predicate(const PhasePoint& u, double amplitude);

enum class ConstituentParity { AllOdd, AllEven, Mixed };

std::string to_string(ConstituentParity p);

struct ConstituentEntry {
  PhasePoint u;
  int order = 0;
  bool odd = false;
};

/// Cyclic orders of the dephasing constituents of the isotropic semigroup
/// over G (|G| >= 3). AllOdd: every constituent is ENM while the mixture is a
/// semigroup. AllEven: no constituent at the semigroup amplitude is ENM.
struct ConstituentReport {
  std::vector<ConstituentEntry> entries;
  ConstituentParity summary = ConstituentParity::Mixed;
};

ConstituentReport dephasing_constituent_parity(const SubgroupHNF& group);

}  // namespace weyl
