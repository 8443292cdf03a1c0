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

#ifndef ROVER_CONTROL_PID_H_
#define ROVER_CONTROL_PID_H_

#include <limits>

namespace rover::control {

/// Gains of u = kp e + ki int(e) + kd de/dt.
struct PidGains {
  double kp = 0.0;
  double ki = 0.0;  // 1/s
  double kd = 0.0;  // s

  bool IsValid() const;
};

/// Gains deployed on the robot's speed loop.
inline constexpr PidGains kDefaultSpeedGains{
    .kp = 3.94, .ki = 1.52, .kd = 2.51};

struct PidState {
  double integral = 0.0;
  double prev_error = 0.0;
  bool initialized = false;
};

struct PidOutput {
  double command = 0.0;
  PidState state;
};

/// One discrete PID update.
///
/// The integral accumulates e * dt including the current sample (backward
/// Euler) and the derivative is the backward difference of the error. On the
/// first call the previous error is taken equal to `error`, so there is no
/// derivative kick. If the resulting command exceeds `output_limit` in the
/// direction of the error, the integral is left unchanged for this step
/// (conditional integration). Pass an infinite limit to disable the clamp.
///
/// The returned command itself is not saturated. Throws
/// std::invalid_argument for dt <= 0.
PidOutput PidStep(
    const PidState& state, double error, double dt, const PidGains& gains,
    double output_limit = std::numeric_limits<double>::infinity());

/// Owns the memory of one PID loop.
class PidController {
 public:
  PidController(const PidGains& gains, double output_limit);

  double Step(double error, double dt);
  void Reset(const PidState& state = {}) { state_ = state; }

  const PidGains& gains() const { return gains_; }
  const PidState& state() const { return state_; }

 private:
  PidGains gains_;
  double output_limit_;
  PidState state_;
};

}  // namespace rover::control

#endif  // ROVER_CONTROL_PID_H_
