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

#include "rover/sim/integrator.h"

#include <string>

namespace rover::sim {

Integrator ParseIntegrator(std::string_view name) {
  if (name == "euler") return Integrator::kEuler;
  if (name == "rk4") return Integrator::kRk4;
  throw std::invalid_argument("unknown integrator '" + std::string(name) +
                              "' (expected euler or rk4)");
}

std::string_view IntegratorName(Integrator integrator) {
  return integrator == Integrator::kEuler ? "euler" : "rk4";
}

}  // namespace rover::sim
