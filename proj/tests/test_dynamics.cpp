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

#include "oracles/rate_oracle.hpp"
#include "weyl/dynamics.hpp"
#include "weyl/errors.hpp"

using namespace weyl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("exponential profile") {
  const auto p = ProbabilityProfile::exponential(0.6, 2.0);
  CHECK(p.value(0.0) == 0.0);
  CHECK_THAT(p.value(1.0), WithinAbs(0.6 * (1 - std::exp(-2.0)), 1e-15));
  CHECK_THAT(p.derivative(1.0), WithinAbs(1.2 * std::exp(-2.0), 1e-15));
  CHECK_THROWS_AS(ProbabilityProfile::exponential(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(ProbabilityProfile::exponential(1.2, 1.0), InvalidArgument);
  CHECK_THROWS_AS(ProbabilityProfile::exponential(0.5, 0.0), InvalidArgument);
}

TEST_CASE("tabulated profile") {
  const auto p = ProbabilityProfile::tabulated({{0.0, 0.0}, {1.0, 0.2}, {2.0, 0.5}, {4.0, 0.6}});
  CHECK(p.value(0.0) == 0.0);
  CHECK_THAT(p.value(2.0), WithinAbs(0.5, 1e-15));
  CHECK_THAT(p.value(9.0), WithinAbs(0.6, 1e-15));
  // Monotone data gives a monotone interpolant.
  double prev = 0.0;
  for (double t = 0.0; t <= 4.0; t += 0.01) {
    CHECK(p.value(t) >= prev - 1e-15);
    prev = p.value(t);
  }
  CHECK(p.derivative(5.0) == 0.0);
  CHECK_THROWS_AS(ProbabilityProfile::tabulated({{0.5, 0.0}, {1.0, 0.1}}), InvalidArgument);
  CHECK_THROWS_AS(ProbabilityProfile::tabulated({{0.0, 0.0}, {1.0, 1.5}}), InvalidArgument);
  CHECK_THROWS_AS(ProbabilityProfile::tabulated({{0.0, 0.0}, {1.0, 0.1}, {1.0, 0.2}}), InvalidArgument);
  const auto zero = ProbabilityProfile::zero();
  CHECK(zero.value(3.0) == 0.0);
  CHECK(zero.derivative(3.0) == 0.0);
}

TEST_CASE("eigenvalues") {
  const auto g = make_subgroup(4, 1, 1, 2);
  const auto profile = ProbabilityProfile::exponential(0.5, 1.0);
  const auto iso = WeylDynamics::isotropic(g, profile);
  const auto dual = dual_subgroup(g);
  const double t = 0.7, p = profile.value(t);
  for (int a = 0; a < 16; ++a) {
    const auto v = PhasePoint::from_index(a, 4);
    CHECK(std::abs(eigenvalue(iso, v, 0.0) - 1.0) < 1e-15);
    const double expect = dual.contains(v) ? 1.0 : 1.0 - 8.0 * p / 7.0;
    CHECK(std::abs(eigenvalue(iso, v, t) - expect) < 1e-14);
  }
  const auto u = PhasePoint::make(1, 2, 5);
  const auto deph = WeylDynamics::dephasing(u, profile);
  for (int a = 0; a < 25; ++a) {
    const auto v = PhasePoint::from_index(a, 5);
    const Complex w = root_of_unity(symplectic_product(u, v), 5);
    CHECK(std::abs(eigenvalue(deph, v, t) - (1.0 - (1.0 - w) * p)) < 1e-14);
    CHECK(std::abs(eigenvalue(deph, v, t)) <= 1.0 + 1e-15);
  }
}

TEST_CASE("generator eigenvalues") {
  const auto g = make_subgroup(3, 1, 0, 3);
  const auto iso = WeylDynamics::isotropic(g, ProbabilityProfile::exponential(0.4, 1.0));
  for (const auto& v : subgroup_elements(dual_subgroup(g))) CHECK(std::abs(generator_eigenvalue(iso, v, 1.0)) == 0.0);

  const auto profile = ProbabilityProfile::exponential(0.3, 1.5);
  const auto u = PhasePoint::make(1, 1, 4);
  const auto deph = WeylDynamics::dephasing(u, profile);
  const double t = 0.9, p = profile.value(t), dp = profile.derivative(t);
  for (int a = 0; a < 16; ++a) {
    const auto v = PhasePoint::from_index(a, 4);
    const Complex w = root_of_unity(symplectic_product(u, v), 4);
    CHECK(std::abs(generator_eigenvalue(deph, v, t) - dp * (w - 1.0) / (1.0 - p + p * w)) < 1e-13);
  }
  const auto qubit = WeylDynamics::dephasing(PhasePoint::make(1, 0, 2), ProbabilityProfile::exponential(0.5, 1.0));
  CHECK_THROWS_AS(generator_eigenvalue(qubit, PhasePoint::make(0, 1, 2), 40.0), NoninvertibleError);
}

TEST_CASE("decay rates") {
  const auto profile = ProbabilityProfile::exponential(2.0 / 3, 1.0);
  const auto g = make_subgroup(3, 1, 2, 3);
  const auto iso = WeylDynamics::isotropic(g, profile);
  for (double t : {0.01, 1.0, 6.0}) {
    const auto r = decay_rates(iso, t);
    for (int a = 1; a < 9; ++a) {
      const auto alpha = PhasePoint::from_index(a, 3);
      CHECK_THAT(r[alpha], WithinAbs(g.contains(alpha) ? 1.0 / 3 : 0.0, 1e-12));
    }
    CHECK(r.imag_residue < 1e-10);
  }
  const auto still = WeylDynamics::isotropic(g, ProbabilityProfile::zero());
  for (double x : decay_rates(still, 2.0).gamma) CHECK(x == 0.0);
}

TEST_CASE("rates round-trip to generator eigenvalues") {
  std::mt19937_64 rng(5);
  std::exponential_distribution<double> e(1.0);
  WeylMapSpec w{3, std::vector<double>(9)};
  double total = 0.0;
  for (double& x : w.weights) total += (x = e(rng));
  for (double& x : w.weights) x /= total;
  const WeylDynamics dyn(w, ProbabilityProfile::exponential(0.4, 1.0));
  const double t = 1.3;
  const auto r = decay_rates(dyn, t);
  const auto mu = generator_eigenvalues(dyn, t);
  for (int b = 0; b < 9; ++b) {
    const auto v = PhasePoint::from_index(b, 3);
    Complex sum = 0.0;
    for (int a = 1; a < 9; ++a) {
      const auto alpha = PhasePoint::from_index(a, 3);
      sum += r[alpha] * (root_of_unity(symplectic_product(alpha, v), 3) - 1.0);
    }
    CHECK(std::abs(sum - mu[static_cast<size_t>(b)]) < 1e-9);
  }
  // Matrix-level reference.
  const auto m = oracle::matrix_rates(dyn, t);
  for (int a = 1; a < 9; ++a) CHECK_THAT(m.gamma[static_cast<size_t>(a)], WithinAbs(r.gamma[static_cast<size_t>(a)], 1e-10));
}

TEST_CASE("imaginary residue is rejected") {
  std::vector<Complex> mu(4, 0.0);
  mu[1] = Complex(0.0, 1.0);  // not the spectrum of any Hermitian-preserving generator
  CHECK_THROWS_AS(rates_from_generator_eigenvalues(2, 0.0, mu), ResidueError);
}

TEST_CASE("dephasing closed form") {
  const auto profile = ProbabilityProfile::exponential(2.0 / 3, 1.0);
  const auto u = PhasePoint::make(1, 0, 3);
  const auto dyn = WeylDynamics::dephasing(u, profile);
  CHECK_THAT(dephasing_rate_closed_form(u, 2, profile, 1.0), WithinAbs(decay_rates(dyn, 1.0)[PhasePoint::make(2, 0, 3)], 1e-12));
  CHECK_THAT(dephasing_rate_closed_form(u, 1, profile, 1e-9), WithinRel(profile.derivative(0.0), 1e-6));

  // Odd order: the top channel is never positive.
  const auto v = PhasePoint::make(1, 2, 5);
  for (double t : {0.01, 0.5, 3.0, 9.0}) CHECK(dephasing_rate_closed_form(v, 4, profile, t) <= 0.0);

  const auto half = ProbabilityProfile::exponential(1.0, std::log(2.0));  // p(1) = 1/2
  CHECK_THROWS_AS(dephasing_rate_closed_form(PhasePoint::make(0, 1, 2), 1, half, 1.0), SingularityError);
  CHECK_THROWS_AS(dephasing_rate_closed_form(u, 3, profile, 1.0), InvalidArgument);
  CHECK_THROWS_AS(dephasing_rate_closed_form(PhasePoint::make(0, 0, 3), 1, profile, 1.0), InvalidArgument);
}

TEST_CASE("isotropic closed form") {
  const auto g = make_subgroup(4, 2, 0, 2);
  const auto semigroup = ProbabilityProfile::exponential(0.75, 2.0);
  for (double x : isotropic_rate_closed_form(g, semigroup, 1.0).gamma) CHECK((x == 0.0 || std::abs(x - 0.5) < 1e-12));
  for (double x : isotropic_rate_closed_form(g, ProbabilityProfile::zero(), 1.0).gamma) CHECK(x == 0.0);

  const auto three = make_subgroup(3, 1, 0, 3);
  const auto p = ProbabilityProfile::exponential(0.5, 1.0);
  const auto closed = isotropic_rate_closed_form(three, p, 1.0);
  const auto dft = decay_rates(WeylDynamics::isotropic(three, p), 1.0);
  for (int a = 0; a < 9; ++a) CHECK_THAT(closed.gamma[static_cast<size_t>(a)], WithinAbs(dft.gamma[static_cast<size_t>(a)], 1e-9));

  // r = 1 drives Lambda through zero at a finite time.
  const auto full = ProbabilityProfile::exponential(1.0, 1.0);
  const double t0 = std::log(3.0);  // Lambda = 1 - 3p/2 = 0
  CHECK_THROWS_AS(isotropic_rate_closed_form(three, full, t0), NoninvertibleError);
}

TEST_CASE("polynomial identity") {
  CHECK(polynomial_identity_check(0.6, 0.0, 1.0, 5) < 1e-15);
  CHECK(polynomial_identity_check(0.7, 0.3, 1.0, 2) < 1e-14);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(u(rng) * 12);
    const double a = u(rng), b = u(rng);
    if (std::abs(std::pow(a, n) - std::pow(-b, n)) < 1e-2) continue;
    const Complex z = std::polar(1.0, 2 * M_PI * std::floor(u(rng) * n) / n);
    if (std::abs(a + b * z) < 1e-2) continue;
    CHECK(polynomial_identity_check(a, b, z, n) < 1e-12);
  }
  CHECK_THROWS_AS(polynomial_identity_check(0.5, 0.5, -1.0, 2), SingularityError);
}

TEST_CASE("time grids") {
  TimeGrid g;
  const auto t = g.times();
  REQUIRE(t.size() == 64);
  CHECK_THAT(t.front(), WithinAbs(1e-3, 1e-18));
  CHECK_THAT(t.back(), WithinAbs(10.0, 1e-12));
  CHECK(std::is_sorted(t.begin(), t.end()));
  TimeGrid lin{0.0, 1.0, 5, GridSpacing::Linear};
  CHECK(lin.times() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 5, GridSpacing::Log}.times()), InvalidArgument);
  CHECK_THROWS_AS((TimeGrid{1.0, 2.0, 1, GridSpacing::Linear}.times()), InvalidArgument);
  CHECK_THAT(default_grid(4.0).times().back(), WithinAbs(2.5, 1e-12));
}

TEST_CASE("finite-difference derivative") {
  const auto dyn = WeylDynamics::dephasing(PhasePoint::make(1, 0, 3), ProbabilityProfile::exponential(0.5, 1.0));
  const auto v = PhasePoint::make(0, 1, 3);
  for (double t : {0.0, 1e-4, 0.3, 2.0}) {
    CHECK(std::abs(eigenvalue_derivative_fd(dyn, v, t, 1e-3) - eigenvalue_derivative(dyn, v, t)) <
          1e-6 * std::abs(eigenvalue_derivative(dyn, v, t)));
  }
}

TEST_CASE("invertibility along a grid") {
  const auto qubit = WeylDynamics::dephasing(PhasePoint::make(1, 0, 2), ProbabilityProfile::exponential(0.6, 1.0));
  try {
    require_invertible_on_grid(qubit, TimeGrid{}.times());
    FAIL("expected NoninvertibleError");
  } catch (const NoninvertibleError& e) {
    CHECK(e.i() == 0);
    CHECK(e.j() == 1);
    CHECK_THAT(e.t(), WithinAbs(std::log(6.0), 1e-10));
  }
  const auto safe = WeylDynamics::dephasing(PhasePoint::make(1, 0, 2), ProbabilityProfile::exponential(0.4, 1.0));
  CHECK_NOTHROW(require_invertible_on_grid(safe, TimeGrid{}.times()));
}
