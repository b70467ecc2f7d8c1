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

#include "weyl/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "weyl/errors.hpp"
#include "weyl/kernels.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::MarkovianSemigroup:
      return "MarkovianSemigroup";
    case Verdict::CPDivisible:
      return "CPDivisible";
    case Verdict::NonMarkovian:
      return "NonMarkovian";
    case Verdict::EternallyNonMarkovian:
      return "EternallyNonMarkovian";
  }
  return "Unknown";
}

bool check_semigroup_form(const SubgroupHNF& group, const ProbabilityProfile& profile) {
  const double k = static_cast<double>(group.order());
  if (k < 2) throw InvalidArgument("semigroup test needs |G| >= 2");
  if (!profile.is_exponential()) return false;
  return std::abs(profile.amplitude() - (k - 1.0) / k) <= 1e-12 && profile.rate() > 0.0;
}

double semigroup_residual(const WeylDynamics& dyn, double t, double s) {
  if (t < 0.0 || s < 0.0) throw InvalidArgument("semigroup residual needs t, s >= 0");
  const CMatrix sum = superoperator(dyn.at(t + s)).matrix;
  const CMatrix prod = superoperator(dyn.at(t)).matrix * superoperator(dyn.at(s)).matrix;
  return max_abs(sum - prod);
}

std::optional<std::pair<PhasePoint, PhasePoint>> anisotropic_obstruction(const WeylMapSpec& weights) {
  validate(weights);
  if (weights.weights[0] != 0.0) {
    throw InvalidArgument("anisotropic weights must vanish at the identity");
  }
  const int d = weights.d;
  const auto eta = map_eigenvalues(weights);
  std::optional<int> first;
  for (int a = 0; a < d * d; ++a) {
    const Complex beta = 1.0 - eta[static_cast<size_t>(a)];
    if (std::abs(beta) <= 1e-10) continue;
    if (!first) {
      first = a;
      continue;
    }
    const Complex beta0 = 1.0 - eta[static_cast<size_t>(*first)];
    if (std::abs(beta - beta0) > 1e-10) {
      return std::make_pair(PhasePoint::from_index(*first, d), PhasePoint::from_index(a, d));
    }
  }
  return std::nullopt;
}

namespace {

MarkovVerdict cp_verdict(std::span<const RateTable> tables, double tol) {
  MarkovVerdict out;
  if (tables.empty()) throw InvalidArgument("empty time grid");
  out.window_start = tables.front().t;
  out.window_end = tables.back().t;
  const size_t channels = tables.front().gamma.size();
  for (const auto& table : tables) {
    for (size_t a = 1; a < channels; ++a) {
      if (table.gamma[a] < -tol) {
        out.verdict = Verdict::NonMarkovian;
        out.witness = Witness{PhasePoint::from_index(static_cast<int>(a), table.d), table.t,
                              table.gamma[a]};
        return out;
      }
    }
  }
  bool constant = true;
  for (size_t a = 1; a < channels && constant; ++a) {
    double lo = tables.front().gamma[a], hi = lo;
    for (const auto& table : tables) {
      lo = std::min(lo, table.gamma[a]);
      hi = std::max(hi, table.gamma[a]);
    }
    constant = (hi - lo) < tol;
  }
  out.verdict = constant ? Verdict::MarkovianSemigroup : Verdict::CPDivisible;
  return out;
}

}  // namespace

MarkovVerdict classify_tables(std::span<const RateTable> tables, const RateTable* zero_limit,
                              double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("rate tolerance must be positive");
  MarkovVerdict base = cp_verdict(tables, tol);
  if (base.verdict != Verdict::NonMarkovian || zero_limit == nullptr) return base;
  const size_t channels = tables.front().gamma.size();
  for (size_t a = 1; a < channels; ++a) {
    if (std::abs(zero_limit->gamma[a]) >= 1e-8) continue;
    const bool always_negative = std::all_of(tables.begin(), tables.end(), [&](const RateTable& r) {
      return r.gamma[a] < -tol;
    });
    if (always_negative) {
      base.verdict = Verdict::EternallyNonMarkovian;
      base.witness = Witness{PhasePoint::from_index(static_cast<int>(a), tables.front().d),
                             tables.front().t, tables.front().gamma[a]};
      return base;
    }
  }
  return base;
}

MarkovVerdict cp_divisible_on_grid(const RateSource& rates, std::span<const double> grid, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("rate tolerance must be positive");
  const auto tables = kernels::rates_on_grid(rates, grid);
  return cp_verdict(tables, tol);
}

MarkovVerdict enm_on_grid(const RateSource& rates, std::span<const double> grid, double tol) {
  if (grid.empty() || !(grid.front() > 0.0)) {
    throw InvalidArgument("ENM grid must start at t1 > 0");
  }
  const auto tables = kernels::rates_on_grid(rates, grid);
  const RateTable zero_limit = rates(kZeroLimitTime);
  return classify_tables(tables, &zero_limit, tol);
}

bool enm_dephasing_predicate(const PhasePoint& u, double amplitude) {
  if (!(amplitude > 0.0 && amplitude <= 1.0)) {
    throw InvalidArgument("dephasing amplitude must lie in (0, 1]");
  }
  const int ell = cyclic_order(u);
  if (ell % 2 == 1) return ell >= 3;
  // Even l: the always-negative channels are y even (y = 2 needs l >= 4);
  // l = 2 has the single channel gamma_1 = p'/(1 - 2p), never negative
  // while the map is invertible.
  return ell >= 4 && amplitude <= 0.5;
}

std::string to_string(ConstituentParity p) {
  switch (p) {
    case ConstituentParity::AllOdd:
      return "ENMConstituents";
    case ConstituentParity::AllEven:
      return "NonENMConstituents";
    case ConstituentParity::Mixed:
      return "Mixed";
  }
  return "Unknown";
}

ConstituentReport dephasing_constituent_parity(const SubgroupHNF& group) {
  if (group.order() < 3) throw InvalidArgument("constituent parity needs |G| >= 3");
  ConstituentReport report;
  bool any_odd = false, any_even = false;
  for (const auto& u : subgroup_elements(group)) {
    if (u.is_zero()) continue;
    const int ell = cyclic_order(u);
    const bool odd = ell % 2 == 1;
    report.entries.push_back({u, ell, odd});
    (odd ? any_odd : any_even) = true;
  }
  report.summary = any_odd && any_even ? ConstituentParity::Mixed
                   : any_odd           ? ConstituentParity::AllOdd
                                       : ConstituentParity::AllEven;
  return report;
}

}  // namespace weyl
