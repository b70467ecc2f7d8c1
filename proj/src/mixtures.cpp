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

#include "weyl/mixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "weyl/errors.hpp"
#include "weyl/kernels.hpp"

namespace weyl {

MixtureSpec::MixtureSpec(int d, std::vector<MixtureComponent> components, ProbabilityProfile profile)
    : d_(d), components_(std::move(components)), profile_(std::move(profile)) {
  if (d_ < 2) throw InvalidArgument("mixture dimension must be >= 2");
  if (components_.empty()) throw InvalidArgument("mixture needs at least one component");
  double total = 0.0;
  std::set<std::vector<PhasePoint>> seen;
  for (const auto& c : components_) {
    if (c.group.d() != d_) throw InvalidArgument("mixture component has the wrong dimension");
    if (c.group.order() < 2) throw InvalidArgument("mixture components need |G_k| >= 2");
    const bool single = components_.size() == 1;
    if (!(c.weight > 0.0 && (c.weight < 1.0 || (single && c.weight <= 1.0)))) {
      throw InvalidArgument("mixing weight outside (0, 1): " + std::to_string(c.weight));
    }
    total += c.weight;
    if (!seen.insert(subgroup_elements(c.group)).second) {
      throw InvalidArgument("mixture components are not pairwise distinct");
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "mixing weights sum to " << total << ", expected 1";
    throw InvalidArgument(os.str());
  }
}

bool MixtureSpec::has_common_order() const {
  return std::all_of(components_.begin(), components_.end(), [&](const MixtureComponent& c) {
    return c.group.order() == components_.front().group.order();
  });
}

long MixtureSpec::common_order() const {
  if (!has_common_order()) throw InvalidArgument("mixture components have unequal orders");
  return components_.front().group.order();
}

bool MixtureSpec::semigroup_mode() const {
  if (!has_common_order() || !profile_.is_exponential()) return false;
  const double k = static_cast<double>(common_order());
  return std::abs(profile_.amplitude() - (k - 1.0) / k) <= 1e-12;
}

namespace {

WeylMapSpec mixture_direction(const MixtureSpec& mix) {
  const int d = mix.d();
  WeylMapSpec w{d, std::vector<double>(static_cast<size_t>(d) * d, 0.0)};
  for (const auto& c : mix.components()) {
    const double share = c.weight / static_cast<double>(c.group.order() - 1);
    for (const auto& u : subgroup_elements(c.group)) {
      if (!u.is_zero()) w.weight(u) += share;
    }
  }
  // Rounding in the shares can leave the total a few ulps off 1.
  double total = 0.0;
  for (double x : w.weights) total += x;
  for (double& x : w.weights) x /= total;
  return w;
}

void require_semigroup_mode(const MixtureSpec& mix, const char* what) {
  if (!mix.semigroup_mode()) {
    throw InvalidArgument(std::string(what) +
                          " needs equal component orders K and p(t) = (K-1)/K (1 - e^{-ct}); "
                          "use the generic decay_rates path for other mixtures");
  }
}

std::vector<SubgroupHNF> duals_of(const MixtureSpec& mix) {
  std::vector<SubgroupHNF> out;
  out.reserve(mix.size());
  for (const auto& c : mix.components()) out.push_back(dual_subgroup(c.group));
  return out;
}

}  // namespace

WeylDynamics MixtureSpec::dynamics() const { return WeylDynamics(mixture_direction(*this), profile_); }

WeylMapSpec effective_weights(const MixtureSpec& mix, double t) { return mix.dynamics().at(t); }

double dual_multiplicity(const MixtureSpec& mix, const PhasePoint& u) {
  double x = 0.0;
  for (const auto& c : mix.components()) {
    if (dual_subgroup(c.group).contains(u)) x += c.weight;
  }
  return x;
}

double mixture_eigenvalue(const MixtureSpec& mix, const PhasePoint& u, double t) {
  require_semigroup_mode(mix, "mixture_eigenvalue");
  const double x = dual_multiplicity(mix, u);
  return x + (1.0 - x) * std::exp(-mix.profile().rate() * t);
}

CoverageReport coverage_report(const MixtureSpec& mix) {
  const int d = mix.d();
  const int d2 = d * d;
  const auto duals = duals_of(mix);
  CoverageReport report;
  report.multiplicity.assign(static_cast<size_t>(d2), 0.0);
  for (int a = 0; a < d2; ++a) {
    const PhasePoint u = PhasePoint::from_index(a, d);
    int in_duals = 0;
    bool in_group = false;
    for (size_t k = 0; k < mix.size(); ++k) {
      if (duals[k].contains(u)) {
        ++in_duals;
        report.multiplicity[static_cast<size_t>(a)] += mix.components()[k].weight;
      }
      in_group = in_group || mix.components()[k].group.contains(u);
    }
    if (in_duals >= 2) report.dual_intersections.push_back(u);
    if (u.is_zero()) continue;
    (in_group ? report.covered : report.uncovered).push_back(u);
  }
  return report;
}

MixtureBound enm_mixture_bound(int d, long order) {
  if (order < 2) throw InvalidArgument("mixture bound needs K >= 2");
  const long count = count_subgroups(d, order);  // validates K | d^2
  const double capacity = static_cast<double>(long{d} * d - 1) / static_cast<double>(order - 1);
  MixtureBound out;
  out.bound = std::min(capacity, static_cast<double>(count));
  // Largest integer strictly below the bound.
  out.n_max = static_cast<int>(std::ceil(out.bound)) - 1;
  return out;
}

double overlap_function(double x, double rate, double t) {
  return rate * x / (x + (1.0 - x) * std::exp(-rate * t));
}

RateTable mixture_rates_closed_form(const MixtureSpec& mix, double t) {
  require_semigroup_mode(mix, "mixture_rates_closed_form");
  const int d = mix.d();
  const int d2 = d * d;
  const double c = mix.profile().rate();
  const auto duals = duals_of(mix);

  std::vector<double> f(mix.size());
  for (size_t k = 0; k < mix.size(); ++k) f[k] = overlap_function(mix.components()[k].weight, c, t);

  // Overlap gap M(u, t) on S_int \ {0}.
  std::vector<std::pair<PhasePoint, double>> gaps;
  for (int a = 1; a < d2; ++a) {
    const PhasePoint u = PhasePoint::from_index(a, d);
    int hits = 0;
    double x = 0.0, sum_f = 0.0;
    for (size_t k = 0; k < mix.size(); ++k) {
      if (!duals[k].contains(u)) continue;
      ++hits;
      x += mix.components()[k].weight;
      sum_f += f[k];
    }
    if (hits >= 2) gaps.emplace_back(u, sum_f - overlap_function(x, c, t));
  }

  RateTable table{d, t, std::vector<double>(static_cast<size_t>(d2), 0.0), 0.0};
  for (int a = 1; a < d2; ++a) {
    const PhasePoint alpha = PhasePoint::from_index(a, d);
    double acc = c;
    for (size_t k = 0; k < mix.size(); ++k) {
      const auto& g = mix.components()[k].group;
      const double dual_size = static_cast<double>(d2) / static_cast<double>(g.order());
      acc += f[k] * (g.contains(alpha) ? dual_size - 1.0 : -1.0);
    }
    Complex overlap = 0.0;
    for (const auto& [u, m] : gaps) overlap += root_of_unity(-symplectic_product(alpha, u), d) * m;
    table.imag_residue = std::max(table.imag_residue, std::abs(overlap.imag()));
    acc -= overlap.real();
    table.gamma[static_cast<size_t>(a)] = acc / static_cast<double>(d2);
  }
  return table;
}

double mixture_rate_closed_form(const MixtureSpec& mix, const PhasePoint& alpha, double t) {
  if (alpha.d != mix.d()) throw InvalidArgument("channel dimension mismatch");
  if (alpha.is_zero()) throw InvalidArgument("closed-form rates are defined for alpha != 0");
  return mixture_rates_closed_form(mix, t)[alpha];
}

double subadditivity_gap(std::span<const double> xs, double rate, double t) {
  double sum_x = 0.0, sum_f = 0.0;
  for (double x : xs) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("subadditivity inputs must lie in [0, 1]");
    sum_x += x;
    sum_f += overlap_function(x, rate, t);
  }
  if (sum_x > 1.0 + 1e-12) throw InvalidArgument("subadditivity inputs must sum to at most 1");
  return sum_f - overlap_function(std::min(sum_x, 1.0), rate, t);
}

WeylMapSpec gp_embedding_d3(const std::array<double, 5>& q) {
  double total = 0.0;
  for (double x : q) {
    if (!(x >= 0.0)) throw InvalidArgument("generalized Pauli probabilities must be >= 0");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidArgument("generalized Pauli probabilities must sum to 1");
  }
  constexpr std::array<std::array<int, 2>, 4> pairs{{{1, 2}, {3, 6}, {4, 8}, {5, 7}}};
  WeylMapSpec spec{3, std::vector<double>(9, 0.0)};
  spec.weights[0] = q[0];
  for (size_t k = 0; k < pairs.size(); ++k) {
    for (int alpha : pairs[k]) spec.weights[static_cast<size_t>(alpha)] = q[k + 1] / 2.0;
  }
  return spec;
}

NeighbourhoodProbe probe_uniform_neighbourhood(const MixtureSpec& uniform, double radius,
                                               int samples, std::uint64_t seed,
                                               std::span<const double> grid, double tol) {
  const size_t n = uniform.size();
  if (n < 2) throw InvalidArgument("neighbourhood probe needs at least two components");
  if (!(radius > 0.0) || samples < 1) throw InvalidArgument("bad probe radius or sample count");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;

  NeighbourhoodProbe probe;
  probe.radius = radius;
  std::vector<double> x(n);
  while (probe.samples < samples) {
    // Direction in the sum-zero hyperplane, radius uniform in the ball.
    std::vector<double> dir(n);
    double mean = 0.0;
    for (double& v : dir) mean += (v = normal(rng));
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (double& v : dir) {
      v -= mean;
      norm += v * v;
    }
    norm = std::sqrt(norm);
    const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(n - 1));
    bool inside = true;
    for (size_t k = 0; k < n; ++k) {
      x[k] = 1.0 / static_cast<double>(n) + r * dir[k] / norm;
      inside = inside && x[k] > 0.0 && x[k] < 1.0;
    }
    if (!inside) continue;
    std::vector<MixtureComponent> comps = uniform.components();
    double total = 0.0;
    for (size_t k = 0; k < n; ++k) total += (comps[k].weight = x[k]);
    for (auto& comp : comps) comp.weight /= total;
    const MixtureSpec sample(uniform.d(), std::move(comps), uniform.profile());
    const auto tables = kernels::dft_rates_on_grid(sample.dynamics(), grid);
    ++probe.samples;
    if (classify_tables(tables, nullptr, tol).is_markovian()) ++probe.markovian;
  }
  return probe;
}

}  // namespace weyl
