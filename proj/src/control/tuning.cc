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

#include "rover/control/tuning.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rover::control {

ControllerType ParseControllerType(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "P") return ControllerType::kP;
  if (upper == "PI") return ControllerType::kPI;
  if (upper == "PD") return ControllerType::kPD;
  if (upper == "PID") return ControllerType::kPID;
  throw std::invalid_argument("unknown controller type '" + std::string(name) +
                              "' (expected P, PI, PD or PID)");
}

std::string_view ControllerTypeName(ControllerType type) {
  switch (type) {
    case ControllerType::kP:
      return "P";
    case ControllerType::kPI:
      return "PI";
    case ControllerType::kPD:
      return "PD";
    case ControllerType::kPID:
      return "PID";
  }
  return "?";
}

CriticalParams ComputeCriticalParams(
    const dynamics::LongitudinalParams& params) {
  if (!(params.mass > 0.0) || !(params.spring_k > 0.0)) {
    throw std::invalid_argument("ComputeCriticalParams: m and k must be > 0");
  }
  const double natural_frequency = std::sqrt(params.spring_k / params.mass);
  return {.ultimate_gain = params.mass * params.gravity / params.spring_k,
          .ultimate_period = 2.0 * std::numbers::pi / natural_frequency};
}

ZieglerNicholsResult ZieglerNicholsTune(const CriticalParams& critical,
                                        ControllerType type) {
  const double ku = critical.ultimate_gain;
  const double tu = critical.ultimate_period;
  if (!(ku > 0.0) || !(tu > 0.0)) {
    throw std::invalid_argument("ZieglerNicholsTune: k_U and T_U must be > 0");
  }
  ZieglerNicholsResult result;
  switch (type) {
    case ControllerType::kP:
      result.gains.kp = 0.5 * ku;
      return result;
    case ControllerType::kPI:
      result.gains.kp = 0.45 * ku;
      result.gains.ki = 0.54 * ku / tu;
      result.integral_time = tu / 1.2;
      return result;
    case ControllerType::kPD:
      result.gains.kp = 0.8 * ku;
      result.gains.kd = ku * tu / 10.0;
      result.derivative_time = tu / 8.0;
      return result;
    case ControllerType::kPID:
      result.gains.kp = 0.6 * ku;
      result.gains.ki = 1.2 * ku / tu;
      result.gains.kd = 3.0 * ku * tu / 40.0;
      result.integral_time = tu / 2.0;
      result.derivative_time = tu / 8.0;
      return result;
  }
  throw std::invalid_argument("ZieglerNicholsTune: unknown controller type");
}

}  // namespace rover::control
