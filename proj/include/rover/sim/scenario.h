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

#ifndef ROVER_SIM_SCENARIO_H_
#define ROVER_SIM_SCENARIO_H_

#include <optional>

#include "rover/actuator.h"
#include "rover/control/feedforward.h"
#include "rover/control/pid.h"
#include "rover/dynamics.h"
#include "rover/kinematics.h"
#include "rover/path.h"
#include "rover/sim/integrator.h"
#include "rover/sim/profile.h"

namespace rover::sim {

struct SimConfig {
  double dt = 0.001;      // s
  double duration = 0.0;  // s
  Integrator integrator = Integrator::kRk4;
  int log_decimation = 10;  // integration steps per logged row

  /// Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

/// Physical description of the robot apart from its drive motor.
struct VehicleParams {
  kinematics::RobotGeometry geometry;
  dynamics::LongitudinalParams longitudinal;
  double steering_limit = kinematics::kDefaultSteeringLimit;  // rad
  double steering_rate_limit = 1.0;                           // rad/s
  double steering_time_constant = 0.1;  // s, first-order steering lag

  void Validate() const;
};

struct ControllerParams {
  control::PidGains pid = control::kDefaultSpeedGains;
  control::FeedforwardConfig feedforward;
  double lookahead_gain = 0.2;  // s
  double lookahead_min = 1.0;   // m
  double lookahead_max = 3.0;   // m

  void Validate() const;
};

struct ControllerToggles {
  bool pid = true;
  bool feedforward = true;
  bool pursuit = false;

  bool AnyOn() const { return pid || feedforward || pursuit; }
};

struct InitialState {
  kinematics::Pose pose;
  double v = 0.0;      // m/s
  double delta = 0.0;  // rad
  // Start the speed loop in equilibrium: motor at the steady state that
  // balances the resistance at the initial speed, PID integral preloaded.
  bool trim = true;
};

struct Scenario {
  Profile reference_speed;  // m/s over time, linear
  std::optional<Path> path;
  DisturbanceProfile disturbance;
  Profile steering_command{{{0.0, 0.0}}, Interpolation::kHold};  // rad over t
  InitialState initial;
  ControllerToggles controllers;
  // With the speed PID off, feed the reference straight to the motor as a
  // voltage (open loop). When false the drive command is zero.
  bool open_loop_feedthrough = true;

  void Validate(const VehicleParams& vehicle) const;
};

}  // namespace rover::sim

#endif  // ROVER_SIM_SCENARIO_H_
