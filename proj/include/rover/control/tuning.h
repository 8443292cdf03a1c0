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

#ifndef ROVER_CONTROL_TUNING_H_
#define ROVER_CONTROL_TUNING_H_

#include <optional>
#include <string_view>

#include "rover/control/pid.h"
#include "rover/dynamics.h"

// Ziegler-Nichols closed-loop tuning.
//
// The critical gain and period come from the spring-mass model of the robot:
// k_U = m g / k is its static gain and T_U = 2 pi sqrt(m / k) its natural
// period. The rule table then gives
//
//   type   kp        T_I       T_D      ki            kd
//   P      0.5 k_U
//   PI     0.45 k_U  T_U/1.2            0.54 k_U/T_U
//   PD     0.8 k_U             T_U/8                  k_U T_U/10
//   PID    0.6 k_U   T_U/2     T_U/8    1.2 k_U/T_U   3 k_U T_U/40

namespace rover::control {

struct CriticalParams {
  double ultimate_gain = 0.0;    // k_U
  double ultimate_period = 0.0;  // T_U, s
};

enum class ControllerType { kP, kPI, kPD, kPID };

/// Throws std::invalid_argument for anything other than P, PI, PD or PID
/// (case-insensitive).
ControllerType ParseControllerType(std::string_view name);
std::string_view ControllerTypeName(ControllerType type);

struct ZieglerNicholsResult {
  PidGains gains;
  std::optional<double> integral_time;    // T_I
  std::optional<double> derivative_time;  // T_D
};

/// Throws std::invalid_argument unless mass and spring_k are positive.
CriticalParams ComputeCriticalParams(
    const dynamics::LongitudinalParams& params);

/// Throws std::invalid_argument for non-positive k_U or T_U and for an
/// out-of-range controller type.
ZieglerNicholsResult ZieglerNicholsTune(const CriticalParams& critical,
                                        ControllerType type);

}  // namespace rover::control

#endif  // ROVER_CONTROL_TUNING_H_
