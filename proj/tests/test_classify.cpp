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

#include <cmath>
#include <random>

#include "weyl/classify.hpp"
#include "weyl/errors.hpp"
#include "weyl/kernels.hpp"
#include "weyl/mixtures.hpp"

using namespace weyl;

namespace {

RateSource dft(const WeylDynamics& dyn) {
  return [dyn](double t) { return decay_rates(dyn, t); };
}

ProbabilityProfile semigroup(long order, double c = 1.0) {
  return ProbabilityProfile::exponential(static_cast<double>(order - 1) / static_cast<double>(order), c);
}

const std::vector<double>& grid() {
  static const auto g = TimeGrid{}.times();
  return g;
}

}  // namespace

TEST_CASE("semigroup form") {
  const auto g3 = make_subgroup(3, 1, 0, 3);
  CHECK(check_semigroup_form(g3, ProbabilityProfile::exponential(2.0 / 3, 1.0)));
  CHECK_FALSE(check_semigroup_form(g3, ProbabilityProfile::exponential(0.5, 1.0)));
  CHECK_FALSE(check_semigroup_form(g3, ProbabilityProfile::zero()));

  const auto g2 = make_subgroup(2, 1, 0, 2);
  CHECK(check_semigroup_form(g2, ProbabilityProfile::exponential(0.5, 1.0)));
  const auto dyn = WeylDynamics::isotropic(g2, ProbabilityProfile::exponential(0.5, 1.0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int k = 0; k < 20; ++k) CHECK(semigroup_residual(dyn, u(rng), u(rng)) < 1e-9);
  CHECK(semigroup_residual(dyn, 0.0, 1.3) < 1e-15);
  CHECK(semigroup_residual(dyn, 1.3, 0.0) < 1e-15);
}

TEST_CASE("anisotropic obstruction") {
  WeylMapSpec iso{3, std::vector<double>(9, 1.0 / 8)};
  iso.weights[0] = 0.0;
  CHECK_FALSE(anisotropic_obstruction(iso).has_value());

  WeylMapSpec aniso{3, std::vector<double>(9, 0.5 / 7)};
  aniso.weights[0] = 0.0;
  aniso.weight(PhasePoint::make(1, 0, 3)) = 0.5;
  const auto pair = anisotropic_obstruction(aniso);
  REQUIRE(pair.has_value());
  const auto eta = map_eigenvalues(aniso);
  CHECK(std::abs(eta[static_cast<size_t>(pair->first.index())] - eta[static_cast<size_t>(pair->second.index())]) > 1e-10);

  WeylMapSpec flip{2, {0.0, 0.0, 1.0, 0.0}};
  CHECK_FALSE(anisotropic_obstruction(flip).has_value());

  // Any returned pair breaks the semigroup law for each sampled profile.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (double r : {0.3, 0.5, 0.8}) {
    const WeylDynamics dyn(aniso, ProbabilityProfile::exponential(r, 1.0));
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) worst = std::max(worst, semigroup_residual(dyn, u(rng), u(rng)));
    CHECK(worst > 1e-6);
  }
  WeylMapSpec with_identity = aniso;
  with_identity.weights[0] = 0.1;
  with_identity.weights[3] -= 0.1;
  CHECK_THROWS_AS(anisotropic_obstruction(with_identity), InvalidArgument);
}

TEST_CASE("isotropic semigroups are classified as semigroups for d <= 5") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int d = 2; d <= 5; ++d) {
    for (long k : divisors(long{d} * d)) {
      if (k < 2) continue;
      for (const auto& g : enumerate_subgroups(d, k)) {
        const auto dyn = WeylDynamics::isotropic(g, semigroup(k));
        const auto v = cp_divisible_on_grid(dft(dyn), grid());
        CHECK(v.verdict == Verdict::MarkovianSemigroup);
        CHECK_FALSE(v.witness.has_value());
        CHECK(enm_on_grid(dft(dyn), grid()).verdict == Verdict::MarkovianSemigroup);
        for (int s = 0; s < 20; ++s) CHECK(semigroup_residual(dyn, u(rng), u(rng)) < 1e-9);
      }
    }
  }
}

TEST_CASE("verdicts carry witnesses and windows") {
  const auto g1 = make_subgroup(3, 1, 0, 3), g2 = make_subgroup(3, 3, 0, 1);
  const MixtureSpec two(3, {{0.5, g1}, {0.5, g2}}, semigroup(3));
  const auto v = cp_divisible_on_grid(dft(two.dynamics()), grid());
  CHECK(v.verdict == Verdict::NonMarkovian);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->gamma < -kDefaultRateTolerance);
  CHECK(v.window_start == grid().front());
  CHECK(v.window_end == grid().back());
  CHECK_FALSE(v.is_markovian());

  std::vector<MixtureComponent> four;
  for (const auto& g : enumerate_subgroups(3, 3)) four.push_back({0.25, g});
  const MixtureSpec uniform(3, four, semigroup(3));
  CHECK(cp_divisible_on_grid(dft(uniform.dynamics()), grid()).verdict == Verdict::CPDivisible);
}

TEST_CASE("eternal non-Markovianity on the grid") {
  const auto u = PhasePoint::make(1, 0, 3);
  const auto deph = WeylDynamics::dephasing(u, ProbabilityProfile::exponential(2.0 / 3, 1.0));
  const auto v = enm_on_grid(dft(deph), grid());
  CHECK(v.verdict == Verdict::EternallyNonMarkovian);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->alpha == PhasePoint::make(2, 0, 3));

  // Qubit r = 0.9: the rate changes sign, so not eternal (grid stops short of t*).
  const auto qubit = WeylDynamics::dephasing(PhasePoint::make(1, 0, 2), ProbabilityProfile::exponential(0.9, 1.0));
  const auto early = TimeGrid{1e-3, 0.8, 32, GridSpacing::Log}.times();
  CHECK(enm_on_grid(dft(qubit), early).verdict != Verdict::EternallyNonMarkovian);
  std::vector<double> straddle = {0.2, 0.5, 0.8, 0.9, 1.5, 3.0};
  const auto vq = enm_on_grid(dft(qubit), straddle);
  CHECK(vq.verdict == Verdict::NonMarkovian);

  CHECK_THROWS_AS(enm_on_grid(dft(deph), std::vector<double>{0.0, 1.0}), InvalidArgument);
}

TEST_CASE("dephasing predicate") {
  CHECK(enm_dephasing_predicate(PhasePoint::make(1, 0, 3), 0.1));
  CHECK(enm_dephasing_predicate(PhasePoint::make(1, 0, 3), 1.0));
  CHECK_FALSE(enm_dephasing_predicate(PhasePoint::make(1, 0, 2), 0.9));
  // Order two: the single channel is p'/(1 - 2p) > 0 whenever it exists.
  CHECK_FALSE(enm_dephasing_predicate(PhasePoint::make(1, 0, 2), 0.4));
  CHECK_FALSE(enm_dephasing_predicate(PhasePoint::make(2, 0, 4), 0.5));
  CHECK(enm_dephasing_predicate(PhasePoint::make(1, 0, 4), 0.5));
  CHECK_FALSE(enm_dephasing_predicate(PhasePoint::make(1, 0, 4), 0.6));
  CHECK_THROWS_AS(enm_dephasing_predicate(PhasePoint::make(0, 0, 4), 0.5), InvalidArgument);
}

TEST_CASE("dephasing predicate agrees with grid verdicts") {
  for (int d = 2; d <= 8; ++d) {
    for (int a = 1; a < d * d; ++a) {
      const auto u = PhasePoint::from_index(a, d);
      for (double r : {0.1, 0.3, 0.5, 2.0 / 3, 0.9}) {
        const auto dyn = WeylDynamics::dephasing(u, ProbabilityProfile::exponential(r, 1.0));
        bool grid_enm = false;
        try {
          grid_enm = enm_on_grid(dft(dyn), grid()).verdict == Verdict::EternallyNonMarkovian;
        } catch (const NoninvertibleError&) {
        }
        INFO("d=" << d << " u=(" << u.i << "," << u.j << ") r=" << r);
        CHECK(grid_enm == enm_dephasing_predicate(u, r));
      }
    }
  }
}

TEST_CASE("grid refinement never demotes a semigroup") {
  const auto dyn = WeylDynamics::isotropic(make_subgroup(4, 1, 1, 2), semigroup(8));
  for (int points : {4, 16, 64, 256}) {
    const auto g = TimeGrid{1e-3, 10.0, points, GridSpacing::Log}.times();
    CHECK(cp_divisible_on_grid(dft(dyn), g).verdict == Verdict::MarkovianSemigroup);
  }
}

TEST_CASE("constituent parity") {
  for (const auto& g : enumerate_subgroups(3, 3)) {
    const auto report = dephasing_constituent_parity(g);
    CHECK(report.summary == ConstituentParity::AllOdd);
    CHECK(report.entries.size() == 2);
  }
  CHECK(dephasing_constituent_parity(full_group(2)).summary == ConstituentParity::AllEven);
  const PhasePoint gen = PhasePoint::make(1, 0, 6);
  const auto line = canonicalize(6, std::span<const PhasePoint>(&gen, 1));
  const auto mixed = dephasing_constituent_parity(line);
  CHECK(mixed.summary == ConstituentParity::Mixed);
  std::vector<int> orders;
  for (const auto& e : mixed.entries) orders.push_back(e.order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{2, 3, 3, 6, 6});
  CHECK(to_string(ConstituentParity::AllOdd) == "ENMConstituents");
  CHECK_THROWS_AS(dephasing_constituent_parity(make_subgroup(2, 1, 0, 2)), InvalidArgument);
}
