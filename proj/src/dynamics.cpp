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

#include "weyl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

constexpr double kInvertibilityThreshold = 1e-10;
constexpr double kResidueTolerance = 1e-10;

}  // namespace

// ---------------------------------------------------------------------------
// ProbabilityProfile

ProbabilityProfile ProbabilityProfile::exponential(double amplitude, double rate) {
  if (!(amplitude > 0.0 && amplitude <= 1.0)) {
    throw InvalidArgument("exponential profile amplitude r must lie in (0, 1], got " +
                          std::to_string(amplitude));
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw InvalidArgument("exponential profile rate c must be positive, got " +
                          std::to_string(rate));
  }
  ProbabilityProfile p;
  p.kind_ = Kind::Exponential;
  p.amplitude_ = amplitude;
  p.rate_ = rate;
  return p;
}

ProbabilityProfile ProbabilityProfile::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw InvalidArgument("tabulated profile needs at least one sample");
  if (samples.front().first != 0.0 || samples.front().second != 0.0) {
    throw InvalidArgument("tabulated profile must start at (t=0, p=0)");
  }
  for (size_t k = 0; k < samples.size(); ++k) {
    const auto [t, v] = samples[k];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidArgument("tabulated profile value outside [0, 1] at t=" + std::to_string(t));
    }
    if (k > 0 && !(t > samples[k - 1].first)) {
      throw InvalidArgument("tabulated profile times must be strictly increasing");
    }
  }
  ProbabilityProfile p;
  p.kind_ = Kind::Tabulated;
  p.samples_ = std::move(samples);

  // Fritsch-Carlson monotone slopes.
  const size_t n = p.samples_.size();
  p.slopes_.assign(n, 0.0);
  if (n >= 2) {
    std::vector<double> secant(n - 1);
    for (size_t k = 0; k + 1 < n; ++k) {
      secant[k] = (p.samples_[k + 1].second - p.samples_[k].second) /
                  (p.samples_[k + 1].first - p.samples_[k].first);
    }
    p.slopes_[0] = secant[0];
    p.slopes_[n - 1] = secant[n - 2];
    for (size_t k = 1; k + 1 < n; ++k) {
      if (secant[k - 1] * secant[k] <= 0.0) {
        p.slopes_[k] = 0.0;
      } else {
        const double h0 = p.samples_[k].first - p.samples_[k - 1].first;
        const double h1 = p.samples_[k + 1].first - p.samples_[k].first;
        const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
        p.slopes_[k] = (w1 + w2) / (w1 / secant[k - 1] + w2 / secant[k]);
      }
    }
  }
  return p;
}

ProbabilityProfile ProbabilityProfile::zero() { return tabulated({{0.0, 0.0}}); }

double ProbabilityProfile::interpolate(double t) const {
  if (t <= samples_.front().first) return samples_.front().second;
  if (t >= samples_.back().first) return samples_.back().second;
  auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                             [](double x, const auto& s) { return x < s.first; });
  const size_t k = static_cast<size_t>(std::distance(samples_.begin(), it)) - 1;
  const double t0 = samples_[k].first, t1 = samples_[k + 1].first;
  const double y0 = samples_[k].second, y1 = samples_[k + 1].second;
  const double h = t1 - t0, s = (t - t0) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return h00 * y0 + h10 * h * slopes_[k] + h01 * y1 + h11 * h * slopes_[k + 1];
}

double ProbabilityProfile::value(double t) const {
  if (kind_ == Kind::Exponential) return amplitude_ * -std::expm1(-rate_ * t);
  return interpolate(t);
}

double ProbabilityProfile::derivative(double t) const {
  if (kind_ == Kind::Exponential) return amplitude_ * rate_ * std::exp(-rate_ * t);
  const double h = 1e-6 * std::max(1.0, t);
  if (t < h) return (interpolate(t + h) - interpolate(t)) / h;
  return (interpolate(t + h) - interpolate(t - h)) / (2.0 * h);
}

// ---------------------------------------------------------------------------
// WeylDynamics

WeylDynamics::WeylDynamics(WeylMapSpec direction, ProbabilityProfile profile)
    : direction_(std::move(direction)), profile_(std::move(profile)) {
  validate(direction_);
  const auto eta = map_eigenvalues(direction_);
  beta_.resize(eta.size());
  for (size_t v = 0; v < eta.size(); ++v) {
    beta_[v] = 1.0 - eta[v];
    // Rounding noise in Im(beta) is amplified by 1/lambda once lambda is
    // small, so it is dropped at the level of a few ulps.
    if (std::abs(beta_[v].imag()) <= 1e-15) beta_[v].imag(0.0);
  }
  // validate() pinned sum W = 1, so lambda_0 = 1 exactly.
  beta_[0] = 0.0;
}

WeylDynamics WeylDynamics::isotropic(const SubgroupHNF& group, ProbabilityProfile profile) {
  const long order = group.order();
  if (order < 2) throw InvalidArgument("isotropic map needs |G| >= 2");
  WeylMapSpec w{group.d(), std::vector<double>(static_cast<size_t>(group.d()) * group.d(), 0.0)};
  for (const auto& u : subgroup_elements(group)) {
    if (!u.is_zero()) w.weight(u) = 1.0 / static_cast<double>(order - 1);
  }
  return WeylDynamics(std::move(w), std::move(profile));
}

WeylDynamics WeylDynamics::dephasing(const PhasePoint& u, ProbabilityProfile profile) {
  if (u.is_zero()) throw InvalidArgument("dephasing direction must be a non-identity point");
  WeylMapSpec w{u.d, std::vector<double>(static_cast<size_t>(u.d) * u.d, 0.0)};
  w.weight(u) = 1.0;
  return WeylDynamics(std::move(w), std::move(profile));
}

WeylMapSpec WeylDynamics::at(double t) const {
  const double p = profile_.value(t);
  WeylMapSpec out = direction_;
  for (auto& w : out.weights) w *= p;
  out.weights[0] += 1.0 - p;
  return out;
}

Complex eigenvalue(const WeylDynamics& dyn, const PhasePoint& v, double t) {
  return 1.0 - dyn.beta(v) * dyn.profile().value(t);
}

std::vector<Complex> eigenvalues(const WeylDynamics& dyn, double t) {
  const double p = dyn.profile().value(t);
  std::vector<Complex> out;
  out.reserve(dyn.betas().size());
  for (const Complex& b : dyn.betas()) out.push_back(1.0 - b * p);
  return out;
}

Complex eigenvalue_derivative(const WeylDynamics& dyn, const PhasePoint& v, double t) {
  return -dyn.beta(v) * dyn.profile().derivative(t);
}

Complex eigenvalue_derivative_fd(const WeylDynamics& dyn, const PhasePoint& v, double t, double h) {
  if (!(h > 0.0) || t < 0.0) throw InvalidArgument("finite difference needs h > 0 and t >= 0");
  const auto f = [&](double s) { return eigenvalue(dyn, v, s); };
  if (t == 0.0) return (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
  h = std::min(h, t / 2.0);
  return (f(t - 2.0 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2.0 * h)) / (12.0 * h);
}

namespace {

[[noreturn]] void throw_noninvertible(const PhasePoint& v, double t, double magnitude) {
  std::ostringstream os;
  os << "map not invertible at t=" << t << ": |lambda_(" << v.i << "," << v.j
     << ")| = " << magnitude;
  throw NoninvertibleError(v.i, v.j, v.d, t, os.str());
}

}  // namespace

Complex generator_eigenvalue(const WeylDynamics& dyn, const PhasePoint& v, double t) {
  const Complex lambda = eigenvalue(dyn, v, t);
  if (std::abs(lambda) <= kInvertibilityThreshold) throw_noninvertible(v, t, std::abs(lambda));
  return eigenvalue_derivative(dyn, v, t) / lambda;
}

std::vector<Complex> generator_eigenvalues(const WeylDynamics& dyn, double t) {
  const int d = dyn.d();
  const double p = dyn.profile().value(t);
  const double dp = dyn.profile().derivative(t);
  std::vector<Complex> mu(static_cast<size_t>(d) * d);
  for (int a = 0; a < d * d; ++a) {
    const Complex b = dyn.betas()[static_cast<size_t>(a)];
    const Complex lambda = 1.0 - b * p;
    if (std::abs(lambda) <= kInvertibilityThreshold) {
      throw_noninvertible(PhasePoint::from_index(a, d), t, std::abs(lambda));
    }
    mu[static_cast<size_t>(a)] = -b * dp / lambda;
  }
  return mu;
}

void require_invertible_on_grid(const WeylDynamics& dyn, std::span<const double> grid) {
  const int d = dyn.d();
  for (int a = 0; a < d * d; ++a) {
    const PhasePoint v = PhasePoint::from_index(a, d);
    const Complex beta = dyn.beta(v);
    for (size_t k = 0; k < grid.size(); ++k) {
      const double lam = std::abs(eigenvalue(dyn, v, grid[k]));
      if (lam <= kInvertibilityThreshold) throw_noninvertible(v, grid[k], lam);
    }
    // 1 - beta p(t) can only reach 0 when beta is real.
    if (std::abs(beta.imag()) > 1e-12) continue;
    for (size_t k = 1; k < grid.size(); ++k) {
      double lo = grid[k - 1], hi = grid[k];
      const auto f = [&](double t) { return 1.0 - beta.real() * dyn.profile().value(t); };
      if ((f(lo) > 0.0) == (f(hi) > 0.0)) continue;
      for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        ((f(mid) > 0.0) == (f(lo) > 0.0) ? lo : hi) = mid;
      }
      throw_noninvertible(v, 0.5 * (lo + hi), std::abs(f(0.5 * (lo + hi))));
    }
  }
}

void finish_rate_table(RateTable& table, double mu_scale) {
  if (table.imag_residue > kResidueTolerance * mu_scale) {
    std::ostringstream os;
    os << "decay rate imaginary residue " << table.imag_residue << " exceeds tolerance at t=" << table.t;
    throw ResidueError(os.str());
  }
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * mu_scale;
  for (double& g : table.gamma) {
    if (std::abs(g) <= floor) g = 0.0;
  }
}

RateTable rates_from_generator_eigenvalues(int d, double t, std::span<const Complex> mu) {
  const int d2 = d * d;
  if (mu.size() != static_cast<size_t>(d2)) throw InvalidArgument("generator eigenvalue count");
  std::vector<Complex> roots(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) roots[static_cast<size_t>(k)] = root_of_unity(-k, d);
  double scale = 1.0;
  for (const Complex& m : mu) scale = std::max(scale, std::abs(m));

  RateTable table{d, t, std::vector<double>(static_cast<size_t>(d2), 0.0), 0.0};
  for (int a = 1; a < d2; ++a) {
    const PhasePoint alpha = PhasePoint::from_index(a, d);
    Complex acc = 0.0;
    for (int v = 0; v < d2; ++v) {
      acc += roots[static_cast<size_t>(symplectic_product(alpha, PhasePoint::from_index(v, d)))] *
             mu[static_cast<size_t>(v)];
    }
    acc /= static_cast<double>(d2);
    table.imag_residue = std::max(table.imag_residue, std::abs(acc.imag()));
    table.gamma[static_cast<size_t>(a)] = acc.real();
  }
  finish_rate_table(table, scale);
  return table;
}

RateTable decay_rates(const WeylDynamics& dyn, double t) {
  const auto mu = generator_eigenvalues(dyn, t);
  return rates_from_generator_eigenvalues(dyn.d(), t, mu);
}

double dephasing_rate_closed_form(const PhasePoint& u, int y, const ProbabilityProfile& profile,
                                  double t) {
  const int ell = cyclic_order(u);
  if (y < 1 || y > ell - 1) {
    throw InvalidArgument("dephasing channel index y=" + std::to_string(y) + " outside [1, " +
                          std::to_string(ell - 1) + "]");
  }
  const double p = profile.value(t);
  const double a = 1.0 - p, b = p;
  const double denom = std::pow(a, ell) - std::pow(-b, ell);
  if (denom == 0.0 || (ell % 2 == 0 && std::abs(1.0 - 2.0 * p) <= kInvertibilityThreshold)) {
    std::ostringstream os;
    os << "dephasing closed form singular at t=" << t << " (l=" << ell << ", p=" << p << ")";
    throw SingularityError(os.str());
  }
  return profile.derivative(t) * std::pow(-b, y - 1) * std::pow(a, ell - 1 - y) / denom;
}

RateTable isotropic_rate_closed_form(const SubgroupHNF& group, const ProbabilityProfile& profile,
                                     double t) {
  const long order = group.order();
  if (order < 2) throw InvalidArgument("isotropic rates need |G| >= 2");
  const int d = group.d();
  const double k = static_cast<double>(order);
  const double big_lambda = 1.0 - k * profile.value(t) / (k - 1.0);
  const double big_lambda_dot = -k * profile.derivative(t) / (k - 1.0);
  if (std::abs(big_lambda) <= kInvertibilityThreshold) {
    const SubgroupHNF dual = dual_subgroup(group);
    for (int a = 0; a < d * d; ++a) {
      const PhasePoint v = PhasePoint::from_index(a, d);
      if (!dual.contains(v)) throw_noninvertible(v, t, std::abs(big_lambda));
    }
  }
  RateTable table{d, t, std::vector<double>(static_cast<size_t>(d) * d, 0.0), 0.0};
  const double gamma = -big_lambda_dot / (k * big_lambda);
  for (const auto& u : subgroup_elements(group)) {
    if (!u.is_zero()) table.gamma[static_cast<size_t>(u.index())] = gamma;
  }
  return table;
}

double polynomial_identity_check(Complex a, Complex b, Complex z, int n) {
  if (n < 1) throw InvalidArgument("polynomial identity needs n >= 1");
  if (std::abs(std::pow(z, n) - 1.0) > 1e-12) throw InvalidArgument("z is not an n-th root of unity");
  const Complex lhs_denom = a + b * z;
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  if (std::abs(lhs_denom) <= 1e-15 * scale) throw SingularityError("A + B z vanishes");
  const Complex rhs_denom = std::pow(a, n) - std::pow(-b, n);
  if (std::abs(rhs_denom) <= 1e-15 * std::pow(scale, n)) {
    throw SingularityError("A^n - (-B)^n vanishes");
  }
  Complex numer = 0.0;
  Complex zm = 1.0;
  for (int m = 0; m < n; ++m) {
    numer += std::pow(-b, m) * std::pow(a, n - 1 - m) * zm;
    zm *= z;
  }
  return std::abs(1.0 / lhs_denom - numer / rhs_denom);
}

std::vector<double> TimeGrid::times() const {
  if (points < 2) throw InvalidArgument("time grid needs at least 2 points");
  if (!(t_max > t_min)) throw InvalidArgument("time grid needs t_max > t_min");
  if (spacing == GridSpacing::Log && !(t_min > 0.0)) {
    throw InvalidArgument("log-spaced grid needs t_min > 0");
  }
  if (t_min < 0.0) throw InvalidArgument("time grid must start at t >= 0");
  std::vector<double> out(static_cast<size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double s = static_cast<double>(k) / (points - 1);
    out[static_cast<size_t>(k)] = spacing == GridSpacing::Log
                                      ? t_min * std::pow(t_max / t_min, s)
                                      : t_min + (t_max - t_min) * s;
  }
  out.back() = t_max;
  return out;
}

TimeGrid default_grid(double rate) {
  if (!(rate > 0.0)) throw InvalidArgument("default grid needs a positive rate");
  return TimeGrid{1e-3 / rate, 10.0 / rate, 64, GridSpacing::Log};
}

}  // namespace weyl
