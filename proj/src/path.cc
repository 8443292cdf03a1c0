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

#include "rover/path.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rover {

double Distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

Path::Path(std::vector<Point2> waypoints) : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) {
    throw std::invalid_argument("Path: at least two waypoints are required");
  }
  cumulative_.reserve(waypoints_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    if (!std::isfinite(waypoints_[i].x) || !std::isfinite(waypoints_[i].y)) {
      throw std::invalid_argument("Path: non-finite waypoint");
    }
    if (i == 0) continue;
    const double step = Distance(waypoints_[i - 1], waypoints_[i]);
    if (step <= 0.0) {
      throw std::invalid_argument(
          "Path: repeated waypoint (zero-length segment)");
    }
    cumulative_.push_back(cumulative_.back() + step);
  }
}

Point2 Path::PointAt(double arc) const {
  arc = std::clamp(arc, 0.0, length());
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), arc);
  std::size_t segment = static_cast<std::size_t>(it - cumulative_.begin());
  segment = std::clamp<std::size_t>(segment, 1, segment_count()) - 1;
  const Point2 a = waypoints_[segment];
  const Point2 b = waypoints_[segment + 1];
  const double t = (arc - cumulative_[segment]) /
                   (cumulative_[segment + 1] - cumulative_[segment]);
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Path::Projection Path::Project(Point2 query, double min_arc,
                               double max_arc) const {
  min_arc = std::clamp(min_arc, 0.0, length());
  max_arc = std::clamp(max_arc, min_arc, length());

  Projection best;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const double s0 = cumulative_[i];
    const double s1 = cumulative_[i + 1];
    if (s1 < min_arc) continue;
    if (s0 > max_arc) break;

    const Point2 a = waypoints_[i];
    const Point2 b = waypoints_[i + 1];
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double seg_len = s1 - s0;
    const double t_lo = std::max(0.0, (min_arc - s0) / seg_len);
    const double t_hi = std::min(1.0, (max_arc - s0) / seg_len);
    const double t_raw =
        ((query.x - a.x) * dx + (query.y - a.y) * dy) / (seg_len * seg_len);
    const double t = std::clamp(t_raw, t_lo, t_hi);
    const Point2 p{a.x + t * dx, a.y + t * dy};
    const double d = Distance(p, query);
    if (d < best_distance) {
      best_distance = d;
      const double cross = dx * (query.y - a.y) - dy * (query.x - a.x);
      best = {.point = p,
              .arc = s0 + t * seg_len,
              .signed_distance = cross >= 0.0 ? d : -d,
              .segment = i};
    }
  }
  return best;
}

}  // namespace rover
