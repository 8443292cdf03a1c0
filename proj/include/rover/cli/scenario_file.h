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

#ifndef ROVER_CLI_SCENARIO_FILE_H_
#define ROVER_CLI_SCENARIO_FILE_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rover/actuator.h"
#include "rover/control/tuning.h"
#include "rover/sim/scenario.h"

// YAML scenario files. Every key is optional; omitted keys keep the defaults
// of the corresponding structs. Unknown keys are rejected.
//
//   name: hill                   # label used in summaries
//   duration: 45                 # s
//   dt: 0.001                    # s
//   integrator: rk4              # euler | rk4
//   log_decimation: 10
//   reference_speed: 10          # m/s, or [[t, v], ...] (linear)
//   steering_command: 0          # rad, or [[t, delta], ...] (held); used
//                                # when the pursuit controller is off
//   open_loop_feedthrough: true
//   controllers: {pid: true, feedforward: true, pursuit: false}
//   initial: {x, y, theta, v, delta, trim}
//   path: straight | lane_change | circle
//         | {preset: circle, radius: 10, laps: 3, spacing: 0.1}
//         | [[x, y], ...]
//   disturbance: {grade: flat | hill | [[distance, rad], ...], wind_speed}
//   robot: {mass, spring_k, aero_coeff, gravity, drive_force_limit,
//           wheel_radius, half_track, wheelbase, steering_limit,
//           steering_rate_limit, steering_time_constant}
//   motor: {resistance, inductance, inertia, torque_const, emf_const,
//           gear_ratio, damping, voltage_limit}
//   pid: {kp, ki, kd}
//   feedforward: {kff}
//   pursuit: {lookahead_gain, lookahead_min, lookahead_max}
//   tune: {controller_type: PID}

namespace rover::cli {

/// Scenario-file problem, tagged with the dotted key it concerns.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ScenarioBundle {
  std::string name = "scenario";
  sim::Scenario scenario;
  sim::SimConfig config;
  sim::VehicleParams vehicle;
  actuator::MotorParams motor;
  sim::ControllerParams controllers;
  control::ControllerType tune_type = control::ControllerType::kPID;
};

/// Parses YAML text, applies `key=value` overrides (dotted keys, YAML
/// values) and validates. Throws ConfigError.
ScenarioBundle ParseScenario(std::string_view yaml_text,
                             const std::vector<std::string>& overrides = {});

/// Throws ConfigError for a missing or unreadable file as well as for any
/// parse or validation failure.
ScenarioBundle LoadScenario(const std::filesystem::path& file,
                            const std::vector<std::string>& overrides = {});

}  // namespace rover::cli

#endif  // ROVER_CLI_SCENARIO_FILE_H_
