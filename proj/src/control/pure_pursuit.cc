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

#include "rover/control/pure_pursuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rover::control {
namespace {

using kinematics::Pose;

constexpr double kMinTargetDistance = 1e-9;
// Projection search window ahead of the last progress point, in multiples
// of the maximum lookahead. Keeps overlapping laps of a closed path apart.
constexpr double kProjectionWindowFactor = 5.0;

}  // namespace

bool PursuitConfig::IsValid() const {
  return lookahead_gain >= 0.0 && lookahead_min > 0.0 &&
         lookahead_min <= lookahead_max && wheelbase > 0.0 &&
         steering_limit > 0.0 && steering_limit < std::numbers::pi / 2.0;
}

double LookaheadDistance(double v, const PursuitConfig& config) {
  if (v < 0.0) {
    throw std::invalid_argument("LookaheadDistance: speed must be >= 0");
  }
  return std::clamp(config.lookahead_gain * v, config.lookahead_min,
                    config.lookahead_max);
}

std::optional<LookaheadPoint> FindLookaheadPoint(const Pose& pose,
                                                 const Path& path,
                                                 double lookahead,
                                                 double min_arc,
                                                 double max_arc) {
  const Point2 center{pose.x, pose.y};
  const Path::Projection projection = path.Project(center, min_arc, max_arc);
  if (std::abs(projection.signed_distance) > lookahead) return std::nullopt;

  const auto& wp = path.waypoints();
  for (std::size_t i = projection.segment; i < path.segment_count(); ++i) {
    const Point2 a = wp[i];
    const Point2 b = wp[i + 1];
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double fx = a.x - center.x;
    const double fy = a.y - center.y;
    // |a + t d - c|^2 = l^2  ->  A t^2 + 2 B t + C = 0
    const double qa = dx * dx + dy * dy;
    const double qb = fx * dx + fy * dy;
    const double qc = fx * fx + fy * fy - lookahead * lookahead;
    const double disc = qb * qb - qa * qc;
    if (disc < 0.0) continue;
    const double root = std::sqrt(disc);
    const double seg_len = std::sqrt(qa);
    const double s0 = path.segment_start_arc(i);
    for (const double t : {(-qb - root) / qa, (-qb + root) / qa}) {
      if (t < 0.0 || t > 1.0) continue;
      const double arc = s0 + t * seg_len;
      if (arc < projection.arc) continue;
      return LookaheadPoint{.point = {a.x + t * dx, a.y + t * dy},
                            .arc_position = arc};
    }
  }
  return std::nullopt;
}

double UnclampedPursuitSteering(const Pose& pose, Point2 target,
                                double wheelbase) {
  const double dx = target.x - pose.x;
  const double dy = target.y - pose.y;
  const double distance = std::hypot(dx, dy);
  if (distance < kMinTargetDistance) {
    throw std::invalid_argument(
        "PurePursuitSteering: target coincides with the rear axle");
  }
  const double alpha =
      kinematics::NormalizeAngle(std::atan2(dy, dx) - pose.theta);
  return std::atan(2.0 * wheelbase * std::sin(alpha) / distance);
}

double PurePursuitSteering(const Pose& pose, Point2 target,
                           const PursuitConfig& config) {
  return std::clamp(UnclampedPursuitSteering(pose, target, config.wheelbase),
                    -config.steering_limit, config.steering_limit);
}

PurePursuitTracker::PurePursuitTracker(const PursuitConfig& config)
    : config_(config) {
  if (!config.IsValid()) {
    throw std::invalid_argument("PurePursuitTracker: invalid PursuitConfig");
  }
}

PurePursuitTracker::Command PurePursuitTracker::Update(const Pose& pose,
                                                       double speed,
                                                       const Path& path) {
  Command command;
  command.lookahead = LookaheadDistance(std::max(speed, 0.0), config_);
  const double window_end =
      progress_arc_ + kProjectionWindowFactor * config_.lookahead_max;
  const Path::Projection projection =
      path.Project({pose.x, pose.y}, progress_arc_, window_end);
  progress_arc_ = projection.arc;

  const auto found = FindLookaheadPoint(pose, path, command.lookahead,
                                        progress_arc_, window_end);
  if (found) {
    // The pursued point never slides back along the path, even when the
    // lookahead shrinks with speed.
    if (found->arc_position >= target_arc_) {
      target_arc_ = found->arc_position;
      command.target = found->point;
    } else {
      command.target = path.PointAt(target_arc_);
    }
    command.target_arc = target_arc_;
  } else {
    command.fallback = true;
    command.target = std::abs(projection.signed_distance) > command.lookahead
                         ? projection.point
                         : path.waypoints().back();
  }

  if (Distance(command.target, {pose.x, pose.y}) < kMinTargetDistance) {
    command.steering = 0.0;
  } else {
    command.steering = PurePursuitSteering(pose, command.target, config_);
  }
  return command;
}

}  // namespace rover::control
