// Copyright 2026 The Rover Control Authors
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

#ifndef ROVER_SIM_INTEGRATOR_H_
#define ROVER_SIM_INTEGRATOR_H_

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string_view>

namespace rover::sim {

enum class Integrator { kEuler, kRk4 };

/// Throws std::invalid_argument for names other than "euler" and "rk4".
Integrator ParseIntegrator(std::string_view name);
std::string_view IntegratorName(Integrator integrator);

template <std::size_t N>
using StateVector = std::array<double, N>;

namespace internal {

template <std::size_t N>
StateVector<N> Axpy(const StateVector<N>& x, double a,
                    const StateVector<N>& y) {
  StateVector<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = x[i] + a * y[i];
  return out;
}

template <std::size_t N>
void CheckFinite(const StateVector<N>& rate) {
  for (const double r : rate) {
    if (!std::isfinite(r)) {
      throw std::domain_error("IntegrateStep: non-finite derivative");
    }
  }
}

}  // namespace internal

/// Advances `state` by one fixed step of explicit Euler or classical RK4.
/// `derivative` maps a StateVector<N> to its time derivative; it is
/// evaluated once (Euler) or four times (RK4). Throws std::domain_error
/// when any evaluated derivative is non-finite and std::invalid_argument
/// for dt <= 0.
template <std::size_t N, typename Derivative>
StateVector<N> IntegrateStep(const StateVector<N>& state,
                             const Derivative& derivative, double dt,
                             Integrator integrator) {
  using internal::Axpy;
  using internal::CheckFinite;
  if (!(dt > 0.0)) {
    throw std::invalid_argument("IntegrateStep: dt must be > 0");
  }
  const StateVector<N> k1 = derivative(state);
  CheckFinite(k1);
  if (integrator == Integrator::kEuler) {
    return Axpy(state, dt, k1);
  }
  const StateVector<N> k2 = derivative(Axpy(state, dt / 2.0, k1));
  CheckFinite(k2);
  const StateVector<N> k3 = derivative(Axpy(state, dt / 2.0, k2));
  CheckFinite(k3);
  const StateVector<N> k4 = derivative(Axpy(state, dt, k3));
  CheckFinite(k4);
  StateVector<N> next;
  for (std::size_t i = 0; i < N; ++i) {
    next[i] = state[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return next;
}

}  // namespace rover::sim

#endif  // ROVER_SIM_INTEGRATOR_H_
