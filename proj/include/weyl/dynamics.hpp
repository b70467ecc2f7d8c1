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

// Time-dependent Weyl maps E(t) = (1 - p(t)) id + p(t) W, their spectra,
// generator eigenvalues and GKLS decay rates.

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "weyl/phase_space.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl {

/// Mixing function p(t) with p(0) = 0 and values in [0, 1].
class ProbabilityProfile {
 public:
  enum class Kind { Exponential, Tabulated };

  /// p(t) = r (1 - exp(-c t)) with r in (0, 1], c > 0.
  static ProbabilityProfile exponential(double amplitude, double rate);
  /// Monotone piecewise-cubic (Fritsch-Carlson) interpolation of samples
  /// (t, p); held constant past the last sample. Needs t = 0 -> p = 0 first.
  static ProbabilityProfile tabulated(std::vector<std::pair<double, double>> samples);
  /// p == 0.
  static ProbabilityProfile zero();

  Kind kind() const { return kind_; }
  bool is_exponential() const { return kind_ == Kind::Exponential; }
  double amplitude() const { return amplitude_; }
  double rate() const { return rate_; }
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  double value(double t) const;
  /// Analytic for Exponential; central difference with h = 1e-6 max(1, t)
  /// for Tabulated.
  double derivative(double t) const;

 private:
  ProbabilityProfile() = default;
  double interpolate(double t) const;

  Kind kind_ = Kind::Exponential;
  double amplitude_ = 0.0;
  double rate_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
  std::vector<double> slopes_;
};

/// A Weyl dynamical map driven by one scalar profile:
///   E(t) = (1 - p(t)) id + p(t) W,
/// W a fixed Weyl map (the "direction"). Isotropic, dephasing, anisotropic
/// maps and mixtures of isotropic maps sharing p(t) are all of this form.
class WeylDynamics {
 public:
  WeylDynamics(WeylMapSpec direction, ProbabilityProfile profile);

  /// Isotropic map over G: weight p/(|G|-1) on each u in G \ {0}.
  static WeylDynamics isotropic(const SubgroupHNF& group, ProbabilityProfile profile);
  /// (1 - p) rho + p U_u rho U_u^dagger.
  static WeylDynamics dephasing(const PhasePoint& u, ProbabilityProfile profile);

  int d() const { return direction_.d; }
  const WeylMapSpec& direction() const { return direction_; }
  const ProbabilityProfile& profile() const { return profile_; }

  /// Weights of E(t).
  WeylMapSpec at(double t) const;

  /// beta_v = 1 - sum_u W_u omega^{u ^ v}, so lambda_v(t) = 1 - beta_v p(t).
  Complex beta(const PhasePoint& v) const { return beta_[static_cast<size_t>(v.index())]; }
  std::span<const Complex> betas() const { return beta_; }

 private:
  WeylMapSpec direction_;
  ProbabilityProfile profile_;
  std::vector<Complex> beta_;
};

/// lambda_v(t) = sum_u omega^{u ^ v} p_u(t).
Complex eigenvalue(const WeylDynamics& dyn, const PhasePoint& v, double t);
/// All lambda_v(t) by single index.
std::vector<Complex> eigenvalues(const WeylDynamics& dyn, double t);
/// d lambda_v / dt, using the profile derivative.
Complex eigenvalue_derivative(const WeylDynamics& dyn, const PhasePoint& v, double t);
/// Five-point central difference of lambda_v itself with step h (shrunk to
/// t/2 near t = 0; a one-sided second-order stencil at t = 0).
Complex eigenvalue_derivative_fd(const WeylDynamics& dyn, const PhasePoint& v, double t, double h);

/// mu_v(t) = lambda_v'(t) / lambda_v(t). Throws NoninvertibleError when
/// |lambda_v(t)| <= 1e-10.
Complex generator_eigenvalue(const WeylDynamics& dyn, const PhasePoint& v, double t);

/// Throws NoninvertibleError when some eigenvalue vanishes at a grid point or
/// changes sign between neighbouring grid points; in the latter case the
/// zero is located by bisection and reported.
void require_invertible_on_grid(const WeylDynamics& dyn, std::span<const double> grid);

/// Decay rates gamma_alpha(t) by single index alpha = d*i + j; entry 0 is 0.
struct RateTable {
  int d = 2;
  double t = 0.0;
  std::vector<double> gamma;
  /// Largest |Im| seen before discarding (0 for closed forms).
  double imag_residue = 0.0;

  double operator[](const PhasePoint& alpha) const {
    return gamma[static_cast<size_t>(alpha.index())];
  }
};

/// A rate table for each time; closed forms and the DFT path both fit.
using RateSource = std::function<RateTable(double)>;

/// gamma_alpha = d^-2 sum_v omega^{-alpha ^ v} mu_v, given all mu_v.
/// Throws ResidueError when an imaginary part exceeds
/// 1e-10 * max(1, max_v |mu_v|).
RateTable rates_from_generator_eigenvalues(int d, double t, std::span<const Complex> mu);

/// Shared tail of every inverse-DFT path: throws ResidueError when
/// imag_residue exceeds 1e-10 * mu_scale, then flushes rates below
/// 16 eps * mu_scale to exactly 0 so that vanishing channels print as 0.
void finish_rate_table(RateTable& table, double mu_scale);

/// Inverse-DFT decay rates at time t.
RateTable decay_rates(const WeylDynamics& dyn, double t);

/// All generator eigenvalues at t (throws NoninvertibleError).
std::vector<Complex> generator_eigenvalues(const WeylDynamics& dyn, double t);

/// Dephasing along u, channel alpha = y u, 1 <= y <= l - 1:
///   gamma_y = p' (-B)^{y-1} A^{l-1-y} / (A^l - (-B)^l), A = 1 - p, B = p.
/// Throws SingularityError when the denominator vanishes (even l, p = 1/2).
double dephasing_rate_closed_form(const PhasePoint& u, int y, const ProbabilityProfile& profile,
                                  double t);

/// Isotropic map over G: gamma_alpha = -(1/|G|) Lambda'/Lambda on G \ {0},
/// 0 elsewhere, with Lambda = 1 - |G| p / (|G| - 1).
RateTable isotropic_rate_closed_form(const SubgroupHNF& group, const ProbabilityProfile& profile,
                                     double t);

/// |1/(A + B z) - sum_m (-B)^m A^{n-1-m} z^m / (A^n - (-B)^n)| for z^n = 1.
double polynomial_identity_check(Complex a, Complex b, Complex z, int n);

enum class GridSpacing { Log, Linear };

struct TimeGrid {
  double t_min = 1e-3;
  double t_max = 10.0;
  int points = 64;
  GridSpacing spacing = GridSpacing::Log;

  std::vector<double> times() const;
};

/// 64 log-spaced points on [1e-3, 10] / c.
TimeGrid default_grid(double rate = 1.0);

/// Time used to stand in for the t -> 0+ limit.
inline constexpr double kZeroLimitTime = 1e-9;

}  // namespace weyl
