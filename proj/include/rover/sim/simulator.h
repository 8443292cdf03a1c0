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

#ifndef ROVER_SIM_SIMULATOR_H_
#define ROVER_SIM_SIMULATOR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rover/actuator.h"
#include "rover/kinematics.h"
#include "rover/path.h"
#include "rover/sim/scenario.h"

// Fixed-step closed-loop simulation of the robot:
//
//   speed error -> PID (+ grade feedforward) -> motor voltage
//   motor current -> drive force k i N / r_wheel -> longitudinal balance -> v
//   path -> pure pursuit -> steering command -> rate-limited lag -> delta
//   (v, delta) -> bicycle kinematics -> pose
//
// Controllers run at the integration rate and hold their outputs over each
// step. Road grade is looked up by distance travelled.

namespace rover::sim {

struct TraceRow {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double v_ref = 0.0;
  double delta = 0.0;
  double cte = 0.0;
  double e_v = 0.0;  // v_ref - v
  double u_pid = 0.0;
  double u_ff = 0.0;
  double theta_road = 0.0;
};

struct SimTrace {
  std::vector<TraceRow> rows;
};

/// Full integrator state, exposed for tests.
struct SimState {
  kinematics::Pose pose;
  double delta = 0.0;
  double v = 0.0;
  actuator::MotorState motor;
  double odometer = 0.0;  // signed distance travelled, m
};

struct Metrics {
  double speed_rmse = 0.0;
  double max_speed_error = 0.0;
  double cte_rmse = 0.0;
  double max_cte = 0.0;
  // |e_v| <= 5% of v_ref on every row in the final 20% of the run.
  bool settled = false;
};

class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, std::int64_t step)
      : std::runtime_error(what + " at step " + std::to_string(step)),
        step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

/// Signed perpendicular distance to the closest path segment, positive when
/// the pose is left of the path direction.
double CrossTrackError(const kinematics::Pose& pose, const Path& path);

/// Drive force delivered at the wheels by the motor state.
double DriveForce(const actuator::MotorState& motor,
                  const actuator::MotorParams& motor_params,
                  const kinematics::RobotGeometry& geometry);

/// Voltage whose no-load motor steady state delivers `force` at the wheels.
double TrimVoltage(double force, const actuator::MotorParams& motor_params,
                   const kinematics::RobotGeometry& geometry);

/// Runs the scenario. Deterministic: identical inputs give bit-identical
/// traces. Throws std::invalid_argument for invalid inputs and
/// SimulationError if the state becomes non-finite.
SimTrace RunScenario(const Scenario& scenario, const VehicleParams& vehicle,
                     const actuator::MotorParams& motor,
                     const ControllerParams& controllers,
                     const SimConfig& config);

/// Throws std::invalid_argument for an empty trace.
Metrics ComputeMetrics(const SimTrace& trace);

}  // namespace rover::sim

#endif  // ROVER_SIM_SIMULATOR_H_
