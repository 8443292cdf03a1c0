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

#ifndef ROVER_SIM_PROFILE_H_
#define ROVER_SIM_PROFILE_H_

#include <vector>

#include "rover/dynamics.h"
#include "rover/path.h"

namespace rover::sim {

enum class Interpolation {
  kLinear,  // piecewise-linear between breakpoints
  kHold,    // value of the last breakpoint at or before the query
};

/// Scalar schedule over time or distance. Outside the breakpoint table the
/// first / last value is held.
class Profile {
 public:
  struct Breakpoint {
    double at = 0.0;
    double value = 0.0;
  };

  Profile() : Profile(Constant(0.0)) {}

  /// Throws std::invalid_argument for an empty table, non-finite entries or
  /// breakpoints that are not strictly increasing.
  Profile(std::vector<Breakpoint> breakpoints, Interpolation interpolation);

  static Profile Constant(double value);

  double At(double x) const;

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  Interpolation interpolation() const { return interpolation_; }
  double MinValue() const;
  double MaxValue() const;

 private:
  std::vector<Breakpoint> breakpoints_;
  Interpolation interpolation_ = Interpolation::kLinear;
};

/// Road grade as a function of distance travelled plus a constant wind.
struct DisturbanceProfile {
  Profile grade;  // rad over m, linear
  double wind_speed = 0.0;
};

dynamics::DisturbanceState DisturbanceAt(const DisturbanceProfile& profile,
                                         double distance_travelled);

// Presets.

/// 0 -> +5 deg -> 0 -> -5 deg -> 0 trapezoid over 400 m.
Profile HillGradeProfile();

/// Two parallel lanes `lane_offset` apart joined by a cosine-shaped
/// transition of length `transition` starting at x = `lead_in`.
Path LaneChangePath(double lane_offset = 3.5, double transition = 30.0,
                    double lead_in = 50.0, double total_length = 300.0,
                    double spacing = 1.0);

/// Counter-clockwise circle centred at the origin, starting at (radius, 0).
Path CirclePath(double radius, double laps = 3.0, double spacing = 0.1);

/// Straight line along +x from the origin.
Path StraightPath(double length, double spacing = 1.0);

}  // namespace rover::sim

#endif  // ROVER_SIM_PROFILE_H_
