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

#ifndef ROVER_KINEMATICS_H_
#define ROVER_KINEMATICS_H_

// Kinematic models of the robot: the differential-drive (unicycle) view used
// for wheel-speed maps and the rear-axle bicycle view used for steering.
//
// Conventions:
// - theta is the heading, measured counter-clockwise from the world x-axis.
// - delta is the front steering angle in the body frame; positive turns left.
// - The pose reference point is the midpoint of the rear (driven) axle.

namespace rover::kinematics {

inline constexpr double kDefaultSteeringLimit = 0.6;  // rad

/// Wraps an angle to (-pi, pi].
double NormalizeAngle(double angle);

struct Pose {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double theta = 0.0;  // rad
};

struct PoseRate {
  double x_dot = 0.0;
  double y_dot = 0.0;
  double theta_dot = 0.0;
};

struct BicycleState {
  Pose pose;
  double delta = 0.0;  // rad
};

struct BicycleRate {
  double x_dot = 0.0;
  double y_dot = 0.0;
  double theta_dot = 0.0;
  double delta_dot = 0.0;
};

/// Geometry of the four-wheeled robot. The half-track is the lateral
/// distance from the axle midpoint to either driven wheel; the wheelbase is
/// the front-to-rear axle distance used by the bicycle reduction.
struct RobotGeometry {
  double wheel_radius = 0.1;  // m
  double half_track = 0.25;   // m
  double wheelbase = 0.6;     // m

  bool IsValid() const;
};

struct WheelSpeeds {
  double right = 0.0;  // rad/s
  double left = 0.0;   // rad/s
};

struct ChassisTwist {
  double v = 0.0;      // m/s
  double omega = 0.0;  // rad/s
};

struct ConstraintResidual {
  double lateral = 0.0;      // no lateral slip at the axle midpoint
  double right_wheel = 0.0;  // no rolling slip, right wheel
  double left_wheel = 0.0;   // no rolling slip, left wheel

  double MaxAbs() const;
};

// All functions below throw std::invalid_argument when handed an invalid
// RobotGeometry.

/// Wheel rotational speeds to chassis speed and yaw rate.
ChassisTwist ForwardKinematics(const WheelSpeeds& wheels,
                               const RobotGeometry& geometry);

/// Chassis speed and yaw rate to wheel rotational speeds.
WheelSpeeds InverseKinematics(const ChassisTwist& twist,
                              const RobotGeometry& geometry);

PoseRate UnicycleDerivatives(const Pose& pose, const ChassisTwist& twist);

/// Rate of the rear-axle bicycle state for longitudinal speed `v` and
/// steering rate `delta_rate`. Throws std::domain_error when
/// |delta| >= pi/2, where tan(delta) is singular.
BicycleRate BicycleDerivatives(const BicycleState& state, double v,
                               double delta_rate,
                               const RobotGeometry& geometry);

/// Chassis twist of the rear axle of a bicycle moving at speed `v` with
/// steering angle `delta`.
ChassisTwist BicycleTwist(double v, double delta,
                          const RobotGeometry& geometry);

/// Evaluates the three no-slip constraint rows at the given motion. A motion
/// is constraint-consistent iff every component is zero.
ConstraintResidual ConstraintResiduals(const PoseRate& pose_rate, double theta,
                                       const WheelSpeeds& wheels,
                                       const RobotGeometry& geometry);

/// Signed radius of the rear-axle circle for steering angle `delta`.
/// Positive radius turns left. Throws std::domain_error for delta == 0
/// (straight motion) and for |delta| >= pi/2.
double TurnRadius(double delta, double wheelbase);

}  // namespace rover::kinematics

#endif  // ROVER_KINEMATICS_H_
