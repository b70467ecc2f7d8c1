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

#include "weyl/weyl_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

constexpr double kInvertibilityThreshold = 1e-10;

void require_dimension(int d) {
  if (d < 2) throw InvalidArgument("dimension d must be >= 2, got " + std::to_string(d));
}

void require_size(int d, size_t size, const char* what) {
  if (size != static_cast<size_t>(d) * static_cast<size_t>(d)) {
    std::ostringstream os;
    os << what << ": expected " << d * d << " entries for d=" << d << ", got " << size;
    throw InvalidArgument(os.str());
  }
}

}  // namespace

Complex root_of_unity(long k, int d) {
  long r = k % d;
  if (r < 0) r += d;
  // Exact values on the axes and exact conjugate symmetry, so symmetric
  // weight sets give real DFTs.
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3L * d) return {0.0, -1.0};
  if (2 * r > d) return std::conj(root_of_unity(d - r, d));
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
  return {std::cos(angle), std::sin(angle)};
}

WeylOperator weyl_operator(long k, long l, int d) {
  require_dimension(d);
  const PhasePoint p = PhasePoint::make(k, l, d);
  WeylOperator op{p.i, p.j, d, CMatrix::Zero(d, d)};
  for (int m = 0; m < d; ++m) {
    op.matrix(m, (m + p.j) % d) = root_of_unity(long{p.i} * m, d);
  }
  return op;
}

WeylMapSpec WeylMapSpec::identity(int d) {
  require_dimension(d);
  WeylMapSpec spec{d, std::vector<double>(static_cast<size_t>(d) * d, 0.0)};
  spec.weights[0] = 1.0;
  return spec;
}

void validate(const WeylMapSpec& spec) {
  require_dimension(spec.d);
  require_size(spec.d, spec.weights.size(), "WeylMapSpec weights");
  double total = 0.0;
  for (size_t a = 0; a < spec.weights.size(); ++a) {
    const double p = spec.weights[a];
    if (!(p >= 0.0)) {
      std::ostringstream os;
      os << "negative or NaN weight " << p << " at alpha=" << a;
      throw InvalidArgument(os.str());
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << total << ", expected 1";
    throw InvalidArgument(os.str());
  }
}

CMatrix apply_map(const WeylMapSpec& spec, const CMatrix& rho) {
  validate(spec);
  if (rho.rows() != spec.d || rho.cols() != spec.d) {
    throw InvalidArgument("density matrix dimension does not match the map");
  }
  CMatrix out = CMatrix::Zero(spec.d, spec.d);
  for (int a = 0; a < spec.d * spec.d; ++a) {
    const double p = spec.weights[static_cast<size_t>(a)];
    if (p == 0.0) continue;
    const auto u = weyl_operator(PhasePoint::from_index(a, spec.d)).matrix;
    out += p * (u * rho * u.adjoint());
  }
  return out;
}

Superoperator weyl_diagonal_superoperator(int d, std::span<const Complex> coefficients) {
  require_dimension(d);
  require_size(d, coefficients.size(), "superoperator coefficients");
  const int d2 = d * d;
  Superoperator s{d, CMatrix::Zero(d2, d2)};
  for (int a = 0; a < d2; ++a) {
    const Complex c = coefficients[static_cast<size_t>(a)];
    if (c == Complex{0.0, 0.0}) continue;
    const CMatrix u = weyl_operator(PhasePoint::from_index(a, d)).matrix;
    const CMatrix uc = u.conjugate();
    // conj(U) kron U; both factors are monomial so this stays cheap.
    for (int r1 = 0; r1 < d; ++r1)
      for (int c1 = 0; c1 < d; ++c1) {
        if (uc(r1, c1) == Complex{0.0, 0.0}) continue;
        for (int r2 = 0; r2 < d; ++r2)
          for (int c2 = 0; c2 < d; ++c2) {
            if (u(r2, c2) == Complex{0.0, 0.0}) continue;
            s.matrix(r1 * d + r2, c1 * d + c2) += c * uc(r1, c1) * u(r2, c2);
          }
      }
  }
  return s;
}

Superoperator superoperator(const WeylMapSpec& spec) {
  validate(spec);
  std::vector<Complex> c(spec.weights.begin(), spec.weights.end());
  return weyl_diagonal_superoperator(spec.d, c);
}

double trace_preservation_defect(const Superoperator& s) {
  const int d = s.d;
  double worst = 0.0;
  for (int col = 0; col < d * d; ++col) {
    Complex tr = 0.0;
    for (int r = 0; r < d; ++r) tr += s.matrix(r + d * r, col);
    const bool diagonal = (col % d) == (col / d);
    worst = std::max(worst, std::abs(tr - (diagonal ? 1.0 : 0.0)));
  }
  return worst;
}

ChoiMatrix choi_matrix(const Superoperator& s) {
  const int d = s.d;
  ChoiMatrix c{d, CMatrix::Zero(d * d, d * d)};
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int cc = 0; cc < d; ++cc)
        for (int e = 0; e < d; ++e) c.matrix(a * d + b, cc * d + e) = s.matrix(a + d * cc, b + d * e);
  return c;
}

ChoiMatrix choi_matrix(const WeylMapSpec& spec) { return choi_matrix(superoperator(spec)); }

double min_eigenvalue(const ChoiMatrix& c) {
  const CMatrix h = 0.5 * (c.matrix + c.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_cp(const ChoiMatrix& c, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("is_cp tolerance must be positive");
  return min_eigenvalue(c) >= -tol;
}

std::vector<Complex> spectrum(const Superoperator& s) {
  Eigen::ComplexEigenSolver<CMatrix> solver(s.matrix, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> map_eigenvalues(int d, std::span<const Complex> coefficients) {
  require_dimension(d);
  require_size(d, coefficients.size(), "map coefficients");
  const int d2 = d * d;
  std::vector<Complex> roots(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) roots[static_cast<size_t>(k)] = root_of_unity(k, d);
  std::vector<Complex> lambda(static_cast<size_t>(d2), 0.0);
  for (int v = 0; v < d2; ++v) {
    const PhasePoint pv = PhasePoint::from_index(v, d);
    Complex acc = 0.0;
    for (int u = 0; u < d2; ++u) {
      const Complex c = coefficients[static_cast<size_t>(u)];
      if (c == Complex{0.0, 0.0}) continue;
      acc += roots[static_cast<size_t>(symplectic_product(PhasePoint::from_index(u, d), pv))] * c;
    }
    lambda[static_cast<size_t>(v)] = acc;
  }
  return lambda;
}

std::vector<Complex> map_eigenvalues(const WeylMapSpec& spec) {
  std::vector<Complex> c(spec.weights.begin(), spec.weights.end());
  return map_eigenvalues(spec.d, c);
}

std::vector<Complex> coefficients_from_eigenvalues(int d, std::span<const Complex> eigenvalues) {
  require_dimension(d);
  require_size(d, eigenvalues.size(), "eigenvalues");
  const int d2 = d * d;
  std::vector<Complex> roots(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) roots[static_cast<size_t>(k)] = root_of_unity(-k, d);
  std::vector<Complex> c(static_cast<size_t>(d2), 0.0);
  for (int u = 0; u < d2; ++u) {
    const PhasePoint pu = PhasePoint::from_index(u, d);
    Complex acc = 0.0;
    for (int v = 0; v < d2; ++v) {
      acc += roots[static_cast<size_t>(symplectic_product(pu, PhasePoint::from_index(v, d)))] *
             eigenvalues[static_cast<size_t>(v)];
    }
    c[static_cast<size_t>(u)] = acc / static_cast<double>(d2);
  }
  return c;
}

Superoperator intermediate_map(const WeylMapSpec& at_t, const WeylMapSpec& at_s, double s_time) {
  if (at_t.d != at_s.d) throw InvalidArgument("intermediate_map: dimension mismatch");
  const int d = at_t.d;
  const auto lt = map_eigenvalues(at_t);
  const auto ls = map_eigenvalues(at_s);
  std::vector<Complex> ratio(lt.size());
  for (size_t v = 0; v < lt.size(); ++v) {
    if (std::abs(ls[v]) < kInvertibilityThreshold) {
      const PhasePoint pv = PhasePoint::from_index(static_cast<int>(v), d);
      std::ostringstream os;
      os << "map not invertible: |lambda_(" << pv.i << "," << pv.j << ")| = " << std::abs(ls[v])
         << " at s=" << s_time;
      throw NoninvertibleError(pv.i, pv.j, d, s_time, os.str());
    }
    ratio[v] = lt[v] / ls[v];
  }
  return weyl_diagonal_superoperator(d, coefficients_from_eigenvalues(d, ratio));
}

bool multiset_match(std::vector<Complex> a, std::vector<Complex> b, double tol, double* worst) {
  if (worst) *worst = 0.0;
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  double max_dist = 0.0;
  for (const Complex& x : a) {
    size_t best = b.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      const double dist = std::abs(x - b[k]);
      if (dist < best_dist) {
        best_dist = dist;
        best = k;
      }
    }
    used[best] = true;
    max_dist = std::max(max_dist, best_dist);
  }
  if (worst) *worst = max_dist;
  return max_dist <= tol;
}

CVector vectorize(const CMatrix& a) {
  return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvectorize(const CVector& v, int d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d) throw InvalidArgument("unvectorize: size mismatch");
  return Eigen::Map<const CMatrix>(v.data(), d, d);
}

bool is_density_matrix(const CMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) return false;
  if (max_abs(rho - rho.adjoint()) > tol) return false;
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol) return false;
  const CMatrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace weyl
