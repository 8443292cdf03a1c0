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

#ifndef ROVER_ACTUATOR_H_
#define ROVER_ACTUATOR_H_

// Armature-controlled DC motor with gear reduction:
//
//   L di/dt + r i = u - k_b w_m
//   J dw_m/dt + f w_m = k i - tau_load
//   w_m = N w_wheel

namespace rover::actuator {

struct MotorParams {
  double resistance = 0.8;    // ohm
  double inductance = 0.011;  // H
  double inertia = 0.2;       // kg m^2
  double torque_const = 0.4;  // N m / A
  double emf_const = 0.4;     // V s / rad
  double gear_ratio = 31.4;
  double damping = 0.05;        // N m s / rad
  double voltage_limit = 12.0;  // V, symmetric

  bool IsValid() const;
};

struct MotorState {
  double current = 0.0;      // A
  double shaft_speed = 0.0;  // rad/s
};

struct MotorRate {
  double current_dot = 0.0;
  double shaft_accel = 0.0;
};

double SaturateVoltage(double voltage, const MotorParams& params);

/// `voltage` is clamped to +-voltage_limit before use.
MotorRate MotorDerivatives(const MotorState& state, double voltage,
                           double load_torque, const MotorParams& params);

/// Analytic fixed point of MotorDerivatives for a constant (unsaturated)
/// voltage and load torque. Throws std::domain_error if k k_b + r f <= 0.
MotorState MotorSteadyState(double voltage, double load_torque,
                            const MotorParams& params);

double MotorTorque(const MotorState& state, const MotorParams& params);

/// Shaft speed to wheel speed through the reduction.
double GearReduce(double shaft_speed, const MotorParams& params);

}  // namespace rover::actuator

#endif  // ROVER_ACTUATOR_H_
