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

#ifndef ROVER_PATH_H_
#define ROVER_PATH_H_

#include <cstddef>
#include <limits>
#include <vector>

namespace rover {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double Distance(Point2 a, Point2 b);

/// Piecewise-linear reference path through an ordered list of waypoints.
/// Arc position is the distance along the polyline from the first waypoint.
class Path {
 public:
  struct Projection {
    Point2 point;
    double arc = 0.0;
    // Positive when the query point lies to the left of the path direction.
    double signed_distance = 0.0;
    std::size_t segment = 0;
  };

  /// Throws std::invalid_argument for fewer than two waypoints, non-finite
  /// coordinates, or zero-length segments.
  explicit Path(std::vector<Point2> waypoints);

  const std::vector<Point2>& waypoints() const { return waypoints_; }
  std::size_t segment_count() const { return waypoints_.size() - 1; }
  double length() const { return cumulative_.back(); }
  double segment_start_arc(std::size_t segment) const {
    return cumulative_[segment];
  }

  /// Point at the given arc position, clamped to the path ends.
  Point2 PointAt(double arc) const;

  /// Closest point of the path restricted to arc positions in
  /// [min_arc, max_arc]. Ties resolve to the smallest arc position.
  Projection Project(
      Point2 query, double min_arc = 0.0,
      double max_arc = std::numeric_limits<double>::infinity()) const;

 private:
  std::vector<Point2> waypoints_;
  std::vector<double> cumulative_;
};

}  // namespace rover

#endif  // ROVER_PATH_H_
