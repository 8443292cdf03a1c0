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

#ifndef ROVER_CONTROL_PURE_PURSUIT_H_
#define ROVER_CONTROL_PURE_PURSUIT_H_

#include <limits>
#include <optional>

#include "rover/kinematics.h"
#include "rover/path.h"

// Pure-pursuit lateral control. The rear axle is steered along the circular
// arc that passes through a target point on the path at distance l_d:
//
//   delta = atan(2 L sin(alpha) / l_d)
//
// where alpha is the angle from the heading to the line of sight and L the
// wheelbase. l_d grows with speed and is saturated to [min, max].

namespace rover::control {

struct PursuitConfig {
  double lookahead_gain = 0.2;                                // s
  double lookahead_min = 1.0;                                 // m
  double lookahead_max = 3.0;                                 // m
  double wheelbase = 0.6;                                     // m
  double steering_limit = kinematics::kDefaultSteeringLimit;  // rad

  bool IsValid() const;
};

/// clamp(gain * v, min, max). Throws std::invalid_argument for v < 0.
double LookaheadDistance(double v, const PursuitConfig& config);

struct LookaheadPoint {
  Point2 point;
  double arc_position = 0.0;
};

/// First point at distance `lookahead` from the rear axle where the path
/// leaves that circle, searching forward from the axle's projection onto
/// the path. The projection is restricted to arc positions in
/// [min_arc, max_arc]; callers pass the previous result to keep progress
/// monotone. Returns nullopt when the path is farther than `lookahead` or
/// ends inside the circle.
std::optional<LookaheadPoint> FindLookaheadPoint(
    const kinematics::Pose& pose, const Path& path, double lookahead,
    double min_arc = 0.0,
    double max_arc = std::numeric_limits<double>::infinity());

/// Steering law without saturation. Throws std::invalid_argument when the
/// target coincides with the rear axle.
double UnclampedPursuitSteering(const kinematics::Pose& pose, Point2 target,
                                double wheelbase);

/// Steering law clamped to +-steering_limit.
double PurePursuitSteering(const kinematics::Pose& pose, Point2 target,
                           const PursuitConfig& config);

/// Stateful tracker used in closed loop. Keeps both the projection and the
/// pursued arc position monotone across calls. When no intersection exists
/// it steers toward the nearest path point ahead: the projection itself when
/// the path is out of reach, otherwise the final waypoint.
class PurePursuitTracker {
 public:
  explicit PurePursuitTracker(const PursuitConfig& config);

  struct Command {
    double steering = 0.0;
    double lookahead = 0.0;
    Point2 target;
    double target_arc = 0.0;  // meaningful unless `fallback`
    bool fallback = false;
  };

  Command Update(const kinematics::Pose& pose, double speed, const Path& path);
  void Reset() {
    progress_arc_ = 0.0;
    target_arc_ = 0.0;
  }

  double progress_arc() const { return progress_arc_; }
  const PursuitConfig& config() const { return config_; }

 private:
  PursuitConfig config_;
  double progress_arc_ = 0.0;
  double target_arc_ = 0.0;
};

}  // namespace rover::control

#endif  // ROVER_CONTROL_PURE_PURSUIT_H_
