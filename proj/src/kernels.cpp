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

#include "weyl/kernels.hpp"

#include <exception>
#include <limits>

#include <omp.h>

#include "weyl/errors.hpp"

namespace weyl::kernels {

namespace {

// omega^{-alpha ^ v} laid out [alpha * d2 + v].
std::vector<Complex> inverse_phase_table(int d) {
  const int d2 = d * d;
  std::vector<Complex> roots(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) roots[static_cast<size_t>(k)] = root_of_unity(-k, d);
  std::vector<Complex> table(static_cast<size_t>(d2) * d2);
  for (int a = 0; a < d2; ++a) {
    const PhasePoint alpha = PhasePoint::from_index(a, d);
    for (int v = 0; v < d2; ++v) {
      table[static_cast<size_t>(a) * d2 + v] =
          roots[static_cast<size_t>(symplectic_product(alpha, PhasePoint::from_index(v, d)))];
    }
  }
  return table;
}

RateTable dft_point(const WeylDynamics& dyn, const std::vector<Complex>& phases, double t) {
  const int d = dyn.d();
  const int d2 = d * d;
  const auto mu = generator_eigenvalues(dyn, t);
  double scale = 1.0;
  for (const Complex& m : mu) scale = std::max(scale, std::abs(m));
  RateTable table{d, t, std::vector<double>(static_cast<size_t>(d2), 0.0), 0.0};
  for (int a = 1; a < d2; ++a) {
    Complex acc = 0.0;
    const Complex* row = phases.data() + static_cast<size_t>(a) * d2;
    for (int v = 0; v < d2; ++v) acc += row[v] * mu[static_cast<size_t>(v)];
    acc /= static_cast<double>(d2);
    table.imag_residue = std::max(table.imag_residue, std::abs(acc.imag()));
    table.gamma[static_cast<size_t>(a)] = acc.real();
  }
  finish_rate_table(table, scale);
  return table;
}

// Runs body(k) for every k, in parallel when `parallel`, and rethrows the
// exception of the smallest failing index.
template <typename Body>
void for_each_index(long count, bool parallel, Body&& body) {
  std::exception_ptr first_error;
  long first_index = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(weyl_kernel_error)
      {
        if (k < first_index) {
          first_index = k;
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<RateTable> rates_on_grid_serial(const RateSource& source, std::span<const double> times) {
  std::vector<RateTable> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(source(t));
  return out;
}

std::vector<RateTable> rates_on_grid(const RateSource& source, std::span<const double> times) {
  std::vector<RateTable> out(times.size());
  for_each_index(static_cast<long>(times.size()), true,
                 [&](long k) { out[static_cast<size_t>(k)] = source(times[static_cast<size_t>(k)]); });
  return out;
}

std::vector<RateTable> dft_rates_on_grid_serial(const WeylDynamics& dyn,
                                                std::span<const double> times) {
  const auto phases = inverse_phase_table(dyn.d());
  std::vector<RateTable> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(dft_point(dyn, phases, t));
  return out;
}

std::vector<RateTable> dft_rates_on_grid(const WeylDynamics& dyn, std::span<const double> times) {
  const auto phases = inverse_phase_table(dyn.d());
  std::vector<RateTable> out(times.size());
  for_each_index(static_cast<long>(times.size()), true, [&](long k) {
    out[static_cast<size_t>(k)] = dft_point(dyn, phases, times[static_cast<size_t>(k)]);
  });
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace weyl::kernels
