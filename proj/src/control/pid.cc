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

#include "rover/control/pid.h"

#include <cmath>
#include <stdexcept>

namespace rover::control {

bool PidGains::IsValid() const {
  return kp >= 0.0 && ki >= 0.0 && kd >= 0.0 && std::isfinite(kp) &&
         std::isfinite(ki) && std::isfinite(kd);
}

PidOutput PidStep(const PidState& state, double error, double dt,
                  const PidGains& gains, double output_limit) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("PidStep: dt must be > 0");
  }
  const double prev_error = state.initialized ? state.prev_error : error;
  const double derivative = (error - prev_error) / dt;
  const double proportional_and_derivative =
      gains.kp * error + gains.kd * derivative;

  double integral = state.integral + error * dt;
  double command = proportional_and_derivative + gains.ki * integral;
  const bool saturated_with_error = (command > output_limit && error > 0.0) ||
                                    (command < -output_limit && error < 0.0);
  if (saturated_with_error) {
    integral = state.integral;
    command = proportional_and_derivative + gains.ki * integral;
  }

  return {.command = command,
          .state = {
              .integral = integral, .prev_error = error, .initialized = true}};
}

PidController::PidController(const PidGains& gains, double output_limit)
    : gains_(gains), output_limit_(output_limit) {
  if (!gains.IsValid()) {
    throw std::invalid_argument("PidController: gains must be finite and >= 0");
  }
}

double PidController::Step(double error, double dt) {
  const PidOutput out = PidStep(state_, error, dt, gains_, output_limit_);
  state_ = out.state;
  return out.command;
}

}  // namespace rover::control
