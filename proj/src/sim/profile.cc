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

#include "rover/sim/profile.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace rover::sim {

Profile::Profile(std::vector<Breakpoint> breakpoints,
                 Interpolation interpolation)
    : breakpoints_(std::move(breakpoints)), interpolation_(interpolation) {
  if (breakpoints_.empty()) {
    throw std::invalid_argument("Profile: at least one breakpoint is required");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i].at) ||
        !std::isfinite(breakpoints_[i].value)) {
      throw std::invalid_argument("Profile: non-finite breakpoint");
    }
    if (i > 0 && !(breakpoints_[i].at > breakpoints_[i - 1].at)) {
      throw std::invalid_argument(
          "Profile: breakpoints must be strictly increasing");
    }
  }
}

Profile Profile::Constant(double value) {
  return Profile({{0.0, value}}, Interpolation::kHold);
}

double Profile::At(double x) const {
  if (x <= breakpoints_.front().at) return breakpoints_.front().value;
  if (x >= breakpoints_.back().at) return breakpoints_.back().value;
  const auto upper = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), x,
      [](double value, const Breakpoint& b) { return value < b.at; });
  const Breakpoint& hi = *upper;
  const Breakpoint& lo = *(upper - 1);
  if (interpolation_ == Interpolation::kHold) return lo.value;
  const double t = (x - lo.at) / (hi.at - lo.at);
  return lo.value + t * (hi.value - lo.value);
}

double Profile::MinValue() const {
  return std::min_element(breakpoints_.begin(), breakpoints_.end(),
                          [](const Breakpoint& a, const Breakpoint& b) {
                            return a.value < b.value;
                          })
      ->value;
}

double Profile::MaxValue() const {
  return std::max_element(breakpoints_.begin(), breakpoints_.end(),
                          [](const Breakpoint& a, const Breakpoint& b) {
                            return a.value < b.value;
                          })
      ->value;
}

dynamics::DisturbanceState DisturbanceAt(const DisturbanceProfile& profile,
                                         double distance_travelled) {
  return {.road_grade = profile.grade.At(distance_travelled),
          .wind_speed = profile.wind_speed};
}

Profile HillGradeProfile() {
  const double five_deg = 5.0 * std::numbers::pi / 180.0;
  return Profile({{0.0, 0.0},
                  {50.0, 0.0},
                  {100.0, five_deg},
                  {150.0, five_deg},
                  {200.0, 0.0},
                  {250.0, 0.0},
                  {300.0, -five_deg},
                  {350.0, -five_deg},
                  {400.0, 0.0}},
                 Interpolation::kLinear);
}

Path LaneChangePath(double lane_offset, double transition, double lead_in,
                    double total_length, double spacing) {
  if (!(spacing > 0.0) || !(transition > 0.0) || lead_in < 0.0 ||
      total_length <= lead_in + transition) {
    throw std::invalid_argument("LaneChangePath: inconsistent dimensions");
  }
  std::vector<Point2> points;
  const auto count =
      static_cast<std::size_t>(std::ceil(total_length / spacing));
  for (std::size_t i = 0; i <= count; ++i) {
    const double x = std::min(static_cast<double>(i) * spacing, total_length);
    double y = 0.0;
    if (x >= lead_in + transition) {
      y = lane_offset;
    } else if (x > lead_in) {
      const double phase = (x - lead_in) / transition;
      y = 0.5 * lane_offset * (1.0 - std::cos(std::numbers::pi * phase));
    }
    if (!points.empty() && points.back().x == x) continue;
    points.push_back({x, y});
  }
  return Path(std::move(points));
}

Path CirclePath(double radius, double laps, double spacing) {
  if (!(radius > 0.0) || !(laps > 0.0) || !(spacing > 0.0)) {
    throw std::invalid_argument(
        "CirclePath: radius, laps, spacing must be > 0");
  }
  const double total_angle = 2.0 * std::numbers::pi * laps;
  const auto count =
      static_cast<std::size_t>(std::ceil(total_angle * radius / spacing));
  std::vector<Point2> points;
  points.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    const double phi =
        total_angle * static_cast<double>(i) / static_cast<double>(count);
    points.push_back({radius * std::cos(phi), radius * std::sin(phi)});
  }
  return Path(std::move(points));
}

Path StraightPath(double length, double spacing) {
  if (!(length > 0.0) || !(spacing > 0.0)) {
    throw std::invalid_argument("StraightPath: length and spacing must be > 0");
  }
  const auto count = static_cast<std::size_t>(std::ceil(length / spacing));
  std::vector<Point2> points;
  for (std::size_t i = 0; i <= count; ++i) {
    points.push_back(
        {length * static_cast<double>(i) / static_cast<double>(count), 0.0});
  }
  return Path(std::move(points));
}

}  // namespace rover::sim
