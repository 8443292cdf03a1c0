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

#include "rover/actuator.h"

#include <algorithm>
#include <stdexcept>

namespace rover::actuator {

bool MotorParams::IsValid() const {
  return resistance > 0.0 && inductance > 0.0 && inertia > 0.0 &&
         torque_const > 0.0 && emf_const > 0.0 && gear_ratio > 0.0 &&
         damping > 0.0 && voltage_limit > 0.0;
}

double SaturateVoltage(double voltage, const MotorParams& params) {
  return std::clamp(voltage, -params.voltage_limit, params.voltage_limit);
}

MotorRate MotorDerivatives(const MotorState& state, double voltage,
                           double load_torque, const MotorParams& p) {
  const double u = SaturateVoltage(voltage, p);
  const double back_emf = p.emf_const * state.shaft_speed;
  return {.current_dot =
              (u - p.resistance * state.current - back_emf) / p.inductance,
          .shaft_accel = (p.torque_const * state.current -
                          p.damping * state.shaft_speed - load_torque) /
                         p.inertia};
}

MotorState MotorSteadyState(double voltage, double load_torque,
                            const MotorParams& p) {
  const double denominator =
      p.torque_const * p.emf_const + p.resistance * p.damping;
  if (denominator <= 0.0) {
    throw std::domain_error("MotorSteadyState: k k_b + r f must be > 0");
  }
  const double speed =
      (p.torque_const * voltage - p.resistance * load_torque) / denominator;
  return {.current = (voltage - p.emf_const * speed) / p.resistance,
          .shaft_speed = speed};
}

double MotorTorque(const MotorState& state, const MotorParams& params) {
  return params.torque_const * state.current;
}

double GearReduce(double shaft_speed, const MotorParams& params) {
  return shaft_speed / params.gear_ratio;
}

}  // namespace rover::actuator
