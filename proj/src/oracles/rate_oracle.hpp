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

// Matrix-level reference for spectra and decay rates. Rates come from the
// generator superoperator L = S'(t) S(t)^{-1}, projected onto the Weyl
// dissipators using Tr[(conj U_a kron U_a)^dagger (conj U_b kron U_b)] = d^2 delta_ab.

#include <vector>

#include "weyl/dynamics.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl::oracle {

/// Eigenvalues of the d^2 x d^2 superoperator.
std::vector<Complex> superoperator_spectrum(const WeylMapSpec& spec);

/// Generator superoperator with S'(t) built from the profile derivative.
CMatrix generator_superoperator(const WeylDynamics& dyn, double t);

/// Same with S'(t) from a central difference of step h.
CMatrix generator_superoperator_fd(const WeylDynamics& dyn, double t, double h);

/// Decay rates read off a generator superoperator. imag_residue holds the
/// largest imaginary part of the projections.
RateTable rates_from_generator(const CMatrix& generator, int d, double t);

/// rates_from_generator(generator_superoperator(dyn, t)).
RateTable matrix_rates(const WeylDynamics& dyn, double t);

}  // namespace weyl::oracle
