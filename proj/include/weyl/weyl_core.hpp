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

// Dense matrix realisation of Weyl operators and Weyl (random-unitary) maps.
// This layer is the numerical oracle: everything here is computed from
// explicit d x d and d^2 x d^2 matrices.
//
// Vectorisation convention: column stacking, vec(A)[r + d c] = A(r, c), so
// vec(X A Y) = (Y^T kron X) vec(A).

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "weyl/phase_space.hpp"

namespace weyl {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// omega^k with omega = exp(2 pi i / d); k is reduced mod d first.
Complex root_of_unity(long k, int d);

/// U_{kl} = sum_m omega^{k m} |m><m + l|.
struct WeylOperator {
  int k = 0;
  int l = 0;
  int d = 2;
  CMatrix matrix;
};

WeylOperator weyl_operator(long k, long l, int d);
inline WeylOperator weyl_operator(const PhasePoint& u) { return weyl_operator(u.i, u.j, u.d); }

/// Weights p_u over Z_d x Z_d, stored by single index alpha = d*i + j.
struct WeylMapSpec {
  int d = 2;
  std::vector<double> weights;

  /// All weight on (0,0).
  static WeylMapSpec identity(int d);

  double weight(const PhasePoint& u) const { return weights[static_cast<size_t>(u.index())]; }
  double& weight(const PhasePoint& u) { return weights[static_cast<size_t>(u.index())]; }
};

/// Throws InvalidArgument unless all weights are >= 0 and sum to 1 within 1e-12.
void validate(const WeylMapSpec& spec);

/// sum_u p_u U_u rho U_u^dagger.
CMatrix apply_map(const WeylMapSpec& spec, const CMatrix& rho);

struct Superoperator {
  int d = 2;
  CMatrix matrix;  // d^2 x d^2, acts on column-stacked density matrices
};

/// Superoperator of sum_u c_u U_u (.) U_u^dagger for arbitrary complex
/// coefficients c_u (indexed by single index). No CP or TP requirement.
Superoperator weyl_diagonal_superoperator(int d, std::span<const Complex> coefficients);

Superoperator superoperator(const WeylMapSpec& spec);

/// Maximum over the trace-preservation conditions sum_r S(r + d r, :) = vec(I)^T.
double trace_preservation_defect(const Superoperator& s);

struct ChoiMatrix {
  int d = 2;
  CMatrix matrix;  // d^2 x d^2, (E kron id)(|Omega><Omega|) * d
};

ChoiMatrix choi_matrix(const Superoperator& s);
ChoiMatrix choi_matrix(const WeylMapSpec& spec);

double min_eigenvalue(const ChoiMatrix& c);
/// Complete positivity: min eigenvalue >= -tol.
bool is_cp(const ChoiMatrix& c, double tol);

/// Eigenvalues of the superoperator (unordered).
std::vector<Complex> spectrum(const Superoperator& s);

/// Map eigenvalues lambda_v = sum_u omega^{u ^ v} p_u for every v, by single
/// index. This is the discrete Fourier transform over the phase space.
std::vector<Complex> map_eigenvalues(int d, std::span<const Complex> coefficients);
std::vector<Complex> map_eigenvalues(const WeylMapSpec& spec);

/// Inverse of map_eigenvalues: c_u = d^-2 sum_v omega^{-u ^ v} lambda_v.
std::vector<Complex> coefficients_from_eigenvalues(int d, std::span<const Complex> eigenvalues);

/// Intermediate map E(t) E(s)^{-1}, assembled from the eigenvalue ratios
/// lambda_v(t) / lambda_v(s) on the Weyl basis. Throws NoninvertibleError
/// when some |lambda_v(s)| < 1e-10; `s_time` is only used in that message.
Superoperator intermediate_map(const WeylMapSpec& at_t, const WeylMapSpec& at_s,
                               double s_time = std::numeric_limits<double>::quiet_NaN());

/// Greedy nearest pairing of two multisets of complex numbers. True when the
/// sizes agree and every pair is within `tol`.
bool multiset_match(std::vector<Complex> a, std::vector<Complex> b, double tol,
                    double* worst = nullptr);

CVector vectorize(const CMatrix& a);
CMatrix unvectorize(const CVector& v, int d);

/// Hermitian, unit trace, positive semidefinite within `tol`.
bool is_density_matrix(const CMatrix& rho, double tol = 1e-10);

double max_abs(const CMatrix& a);

}  // namespace weyl
