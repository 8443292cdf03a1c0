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

#include "rover/sim/scenario.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rover::sim {
namespace {

void Require(bool ok, const std::string& field, const std::string& rule) {
  if (!ok) throw std::invalid_argument(field + ": " + rule);
}

}  // namespace

void SimConfig::Validate() const {
  Require(dt > 0.0 && std::isfinite(dt), "dt", "must be > 0");
  Require(duration >= 0.0 && std::isfinite(duration), "duration",
          "must be >= 0");
  Require(log_decimation >= 1, "log_decimation", "must be >= 1");
}

void VehicleParams::Validate() const {
  Require(geometry.wheel_radius > 0.0, "robot.wheel_radius", "must be > 0");
  Require(geometry.half_track > 0.0, "robot.half_track", "must be > 0");
  Require(geometry.wheelbase > 0.0, "robot.wheelbase", "must be > 0");
  Require(longitudinal.mass > 0.0, "robot.mass", "must be > 0");
  Require(longitudinal.spring_k > 0.0, "robot.spring_k", "must be > 0");
  Require(longitudinal.aero_coeff > 0.0, "robot.aero_coeff", "must be > 0");
  Require(longitudinal.gravity > 0.0, "robot.gravity", "must be > 0");
  Require(longitudinal.drive_force_limit > 0.0, "robot.drive_force_limit",
          "must be > 0");
  Require(steering_limit > 0.0 && steering_limit < std::numbers::pi / 2.0,
          "robot.steering_limit", "must be in (0, pi/2)");
  Require(steering_rate_limit > 0.0, "robot.steering_rate_limit",
          "must be > 0");
  Require(steering_time_constant > 0.0, "robot.steering_time_constant",
          "must be > 0");
}

void ControllerParams::Validate() const {
  Require(pid.kp >= 0.0, "pid.kp", "must be >= 0");
  Require(pid.ki >= 0.0, "pid.ki", "must be >= 0");
  Require(pid.kd >= 0.0, "pid.kd", "must be >= 0");
  Require(std::isfinite(feedforward.kff), "feedforward.kff", "must be finite");
  Require(lookahead_gain >= 0.0, "pursuit.lookahead_gain", "must be >= 0");
  Require(lookahead_min > 0.0, "pursuit.lookahead_min", "must be > 0");
  Require(lookahead_max >= lookahead_min, "pursuit.lookahead_max",
          "must be >= pursuit.lookahead_min");
}

void Scenario::Validate(const VehicleParams& vehicle) const {
  Require(reference_speed.MinValue() >= 0.0, "reference_speed", "must be >= 0");
  Require(!controllers.pursuit || path.has_value(), "path",
          "required when the pursuit controller is on");
  const double half_pi = std::numbers::pi / 2.0;
  Require(disturbance.grade.MinValue() > -half_pi &&
              disturbance.grade.MaxValue() < half_pi,
          "disturbance.grade", "must lie in (-pi/2, pi/2)");
  Require(std::isfinite(disturbance.wind_speed), "disturbance.wind_speed",
          "must be finite");
  Require(std::abs(initial.delta) <= vehicle.steering_limit, "initial.delta",
          "must be within robot.steering_limit");
  Require(std::isfinite(initial.pose.x) && std::isfinite(initial.pose.y) &&
              std::isfinite(initial.pose.theta) && std::isfinite(initial.v),
          "initial", "must be finite");
}

}  // namespace rover::sim
