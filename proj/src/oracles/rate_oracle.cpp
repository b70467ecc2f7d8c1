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

#include "oracles/rate_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "weyl/errors.hpp"

namespace weyl::oracle {

std::vector<Complex> superoperator_spectrum(const WeylMapSpec& spec) {
  return spectrum(superoperator(spec));
}

namespace {

CMatrix checked_inverse(const CMatrix& s, double t) {
  Eigen::FullPivLU<CMatrix> lu(s);
  if (!lu.isInvertible()) {
    throw NoninvertibleError(-1, -1, static_cast<int>(std::lround(std::sqrt(s.rows()))), t,
                             "superoperator is singular");
  }
  return lu.inverse();
}

// Weights of dE/dt: p'(t) (W - delta_0).
std::vector<Complex> derivative_coefficients(const WeylDynamics& dyn, double t) {
  const double dp = dyn.profile().derivative(t);
  std::vector<Complex> c(dyn.direction().weights.size());
  for (size_t a = 0; a < c.size(); ++a) c[a] = dp * dyn.direction().weights[a];
  c[0] -= dp;
  return c;
}

}  // namespace

CMatrix generator_superoperator(const WeylDynamics& dyn, double t) {
  const int d = dyn.d();
  const CMatrix s = superoperator(dyn.at(t)).matrix;
  const CMatrix ds = weyl_diagonal_superoperator(d, derivative_coefficients(dyn, t)).matrix;
  return ds * checked_inverse(s, t);
}

CMatrix generator_superoperator_fd(const WeylDynamics& dyn, double t, double h) {
  const CMatrix plus = superoperator(dyn.at(t + h)).matrix;
  const CMatrix minus = superoperator(dyn.at(std::max(0.0, t - h))).matrix;
  const double span = t + h - std::max(0.0, t - h);
  return ((plus - minus) / span) * checked_inverse(superoperator(dyn.at(t)).matrix, t);
}

RateTable rates_from_generator(const CMatrix& generator, int d, double t) {
  const int d2 = d * d;
  RateTable table{d, t, std::vector<double>(static_cast<size_t>(d2), 0.0), 0.0};
  for (int a = 1; a < d2; ++a) {
    const CMatrix u = weyl_operator(PhasePoint::from_index(a, d)).matrix;
    const CMatrix basis = Eigen::kroneckerProduct(u.conjugate(), u).eval();
    const Complex proj = (basis.adjoint() * generator).trace() / static_cast<double>(d2);
    table.gamma[static_cast<size_t>(a)] = proj.real();
    table.imag_residue = std::max(table.imag_residue, std::abs(proj.imag()));
  }
  return table;
}

RateTable matrix_rates(const WeylDynamics& dyn, double t) {
  return rates_from_generator(generator_superoperator(dyn, t), dyn.d(), t);
}

}  // namespace weyl::oracle
