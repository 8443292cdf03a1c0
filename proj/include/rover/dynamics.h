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

#ifndef ROVER_DYNAMICS_H_
#define ROVER_DYNAMICS_H_

#include <complex>

// Longitudinal force balance of the robot under road-grade and wind
// disturbances, and the frequency-domain transfer functions used to design
// the disturbance feedforward:
//
//   G0(s)  = (m g / k) / ((m / k) s^2 + 1)               spring-mass plant
//   Gp(s)  = (c_a / m) (-1 + sqrt(1 - m F_d / (s c_a)))  drive path
//   Gff(s) = -G0(s) / Gp(s)                              ideal compensator

namespace rover::dynamics {

using Complex = std::complex<double>;

struct LongitudinalParams {
  double mass = 20.0;                // kg
  double spring_k = 30.0;            // N/m
  double aero_coeff = 0.5;           // N s^2 / m^2
  double gravity = 9.81;             // m/s^2
  double drive_force_limit = 200.0;  // N, symmetric saturation

  bool IsValid() const;
};

struct DisturbanceState {
  double road_grade = 0.0;  // rad, positive uphill
  double wind_speed = 0.0;  // m/s, along the direction of travel
};

struct ForceBreakdown {
  double drive = 0.0;  // N
  double aero = 0.0;   // N
  double grade = 0.0;  // N
};

/// Gravity component along the slope, m g sin(grade).
double GradeForce(const DisturbanceState& disturbance,
                  const LongitudinalParams& params);

/// Aerodynamic resistance c_a (v - v_w)^2, carrying the sign of the relative
/// air speed so that a faster tailwind pushes instead of brakes.
double AeroForce(double v, const DisturbanceState& disturbance,
                 const LongitudinalParams& params);

ForceBreakdown Forces(double v, double drive_force,
                      const DisturbanceState& disturbance,
                      const LongitudinalParams& params);

/// Newton balance m dv/dt = sat(F_d) - F_a - F_g.
double LongitudinalAccel(double v, double drive_force,
                         const DisturbanceState& disturbance,
                         const LongitudinalParams& params);

/// Throws std::domain_error at the poles s = +-j sqrt(k/m).
Complex EvalG0(const LongitudinalParams& params, Complex s);

/// Principal branch of the square root. `drive_force_op` is the operating
/// point the drive force is frozen at. Throws std::domain_error at s == 0.
Complex EvalGp(const LongitudinalParams& params, double drive_force_op,
               Complex s);

/// -G0 / Gp. Throws std::domain_error where Gp vanishes or either factor is
/// undefined.
Complex EvalGff(const LongitudinalParams& params, double drive_force_op,
                Complex s);

/// The compensator written out in closed form,
/// m / (c_a (1 - sqrt(1 - m F_d / (s c_a)))) * G0(s). Kept as a second
/// evaluation route for EvalGff.
Complex EvalGffClosedForm(const LongitudinalParams& params,
                          double drive_force_op, Complex s);

}  // namespace rover::dynamics

#endif  // ROVER_DYNAMICS_H_
