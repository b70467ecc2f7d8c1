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

// Grid kernels. Each has a plain serial reference and an OpenMP version with
// identical results (same per-point arithmetic, merged by grid index).

#include <span>
#include <vector>

#include "weyl/dynamics.hpp"

namespace weyl::kernels {

/// Rate tables at every grid time, in grid order. An exception thrown at any
/// grid point is rethrown; when several points fail, the earliest one wins.
std::vector<RateTable> rates_on_grid_serial(const RateSource& source, std::span<const double> times);
std::vector<RateTable> rates_on_grid(const RateSource& source, std::span<const double> times);

/// Inverse-DFT rates for one map over a grid. Precomputes the phase table
/// omega^{-alpha ^ v} once and reuses it at every time.
std::vector<RateTable> dft_rates_on_grid_serial(const WeylDynamics& dyn, std::span<const double> times);
std::vector<RateTable> dft_rates_on_grid(const WeylDynamics& dyn, std::span<const double> times);

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace weyl::kernels
