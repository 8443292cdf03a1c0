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

#include "rover/kinematics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rover::kinematics {
namespace {

void CheckGeometry(const RobotGeometry& geometry) {
  if (!geometry.IsValid()) {
    throw std::invalid_argument(
        "RobotGeometry: wheel_radius, half_track and wheelbase must be > 0");
  }
}

}  // namespace

double NormalizeAngle(double angle) {
  constexpr double kPi = std::numbers::pi;
  double wrapped = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

bool RobotGeometry::IsValid() const {
  return wheel_radius > 0.0 && half_track > 0.0 && wheelbase > 0.0;
}

double ConstraintResidual::MaxAbs() const {
  return std::max(
      {std::abs(lateral), std::abs(right_wheel), std::abs(left_wheel)});
}

ChassisTwist ForwardKinematics(const WheelSpeeds& wheels,
                               const RobotGeometry& geometry) {
  CheckGeometry(geometry);
  const double r = geometry.wheel_radius;
  return {
      .v = r * (wheels.right + wheels.left) / 2.0,
      .omega = r * (wheels.right - wheels.left) / (2.0 * geometry.half_track)};
}

WheelSpeeds InverseKinematics(const ChassisTwist& twist,
                              const RobotGeometry& geometry) {
  CheckGeometry(geometry);
  const double spin = geometry.half_track * twist.omega;
  return {.right = (twist.v + spin) / geometry.wheel_radius,
          .left = (twist.v - spin) / geometry.wheel_radius};
}

PoseRate UnicycleDerivatives(const Pose& pose, const ChassisTwist& twist) {
  return {.x_dot = twist.v * std::cos(pose.theta),
          .y_dot = twist.v * std::sin(pose.theta),
          .theta_dot = twist.omega};
}

BicycleRate BicycleDerivatives(const BicycleState& state, double v,
                               double delta_rate,
                               const RobotGeometry& geometry) {
  CheckGeometry(geometry);
  if (std::abs(state.delta) >= std::numbers::pi / 2.0) {
    throw std::domain_error("BicycleDerivatives: |delta| >= pi/2");
  }
  const double theta = state.pose.theta;
  return {.x_dot = v * std::cos(theta),
          .y_dot = v * std::sin(theta),
          .theta_dot = v * std::tan(state.delta) / geometry.wheelbase,
          .delta_dot = delta_rate};
}

ChassisTwist BicycleTwist(double v, double delta,
                          const RobotGeometry& geometry) {
  CheckGeometry(geometry);
  return {.v = v, .omega = v * std::tan(delta) / geometry.wheelbase};
}

ConstraintResidual ConstraintResiduals(const PoseRate& pose_rate, double theta,
                                       const WheelSpeeds& wheels,
                                       const RobotGeometry& geometry) {
  CheckGeometry(geometry);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double along = c * pose_rate.x_dot + s * pose_rate.y_dot;
  const double spin = geometry.half_track * pose_rate.theta_dot;
  const double r = geometry.wheel_radius;
  return {.lateral = -s * pose_rate.x_dot + c * pose_rate.y_dot,
          .right_wheel = along + spin - r * wheels.right,
          .left_wheel = along - spin - r * wheels.left};
}

double TurnRadius(double delta, double wheelbase) {
  if (delta == 0.0) {
    throw std::domain_error("TurnRadius: straight motion (delta == 0)");
  }
  if (std::abs(delta) >= std::numbers::pi / 2.0) {
    throw std::domain_error("TurnRadius: |delta| >= pi/2");
  }
  return wheelbase / std::tan(delta);
}

}  // namespace rover::kinematics
