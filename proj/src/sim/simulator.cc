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

#include "rover/sim/simulator.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "rover/control/feedforward.h"
#include "rover/control/pid.h"
#include "rover/control/pure_pursuit.h"
#include "rover/dynamics.h"
#include "rover/sim/integrator.h"

namespace rover::sim {
namespace {

constexpr std::size_t kStateSize = 8;
using Vector = StateVector<kStateSize>;

enum Index : std::size_t {
  kX = 0,
  kY,
  kTheta,
  kDelta,
  kSpeed,
  kCurrent,
  kShaftSpeed,
  kOdometer,
};

Vector Pack(const SimState& s) {
  return {s.pose.x, s.pose.y,        s.pose.theta,        s.delta,
          s.v,      s.motor.current, s.motor.shaft_speed, s.odometer};
}

SimState Unpack(const Vector& v) {
  return {.pose = {v[kX], v[kY], v[kTheta]},
          .delta = v[kDelta],
          .v = v[kSpeed],
          .motor = {v[kCurrent], v[kShaftSpeed]},
          .odometer = v[kOdometer]};
}

// Commands held constant over one integration step.
struct HeldCommand {
  double voltage = 0.0;
  double steering = 0.0;
};

class Plant {
 public:
  Plant(const Scenario& scenario, const VehicleParams& vehicle,
        const actuator::MotorParams& motor)
      : scenario_(scenario), vehicle_(vehicle), motor_(motor) {}

  Vector Derivative(const Vector& x, const HeldCommand& command) const {
    const SimState s = Unpack(x);
    const dynamics::DisturbanceState disturbance =
        DisturbanceAt(scenario_.disturbance, s.odometer);
    const double drive = DriveForce(s.motor, motor_, vehicle_.geometry);
    const double accel = dynamics::LongitudinalAccel(s.v, drive, disturbance,
                                                     vehicle_.longitudinal);
    const double steering_rate = std::clamp(
        (command.steering - s.delta) / vehicle_.steering_time_constant,
        -vehicle_.steering_rate_limit, vehicle_.steering_rate_limit);
    const kinematics::BicycleRate bike = kinematics::BicycleDerivatives(
        {s.pose, s.delta}, s.v, steering_rate, vehicle_.geometry);
    const actuator::MotorRate motor_rate =
        actuator::MotorDerivatives(s.motor, command.voltage, 0.0, motor_);

    Vector rate{};
    rate[kX] = bike.x_dot;
    rate[kY] = bike.y_dot;
    rate[kTheta] = bike.theta_dot;
    rate[kDelta] = bike.delta_dot;
    rate[kSpeed] = accel;
    rate[kCurrent] = motor_rate.current_dot;
    rate[kShaftSpeed] = motor_rate.shaft_accel;
    rate[kOdometer] = s.v;
    return rate;
  }

 private:
  const Scenario& scenario_;
  const VehicleParams& vehicle_;
  const actuator::MotorParams& motor_;
};

bool AllFinite(const Vector& x) {
  return std::all_of(x.begin(), x.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

double CrossTrackError(const kinematics::Pose& pose, const Path& path) {
  return path.Project({pose.x, pose.y}).signed_distance;
}

double DriveForce(const actuator::MotorState& motor,
                  const actuator::MotorParams& motor_params,
                  const kinematics::RobotGeometry& geometry) {
  return actuator::MotorTorque(motor, motor_params) * motor_params.gear_ratio /
         geometry.wheel_radius;
}

double TrimVoltage(double force, const actuator::MotorParams& p,
                   const kinematics::RobotGeometry& geometry) {
  // With no load torque the steady current is u f / (k k_b + r f).
  const double current_per_volt =
      p.damping / (p.torque_const * p.emf_const + p.resistance * p.damping);
  const double force_per_volt =
      p.torque_const * current_per_volt * p.gear_ratio / geometry.wheel_radius;
  return force / force_per_volt;
}

SimTrace RunScenario(const Scenario& scenario, const VehicleParams& vehicle,
                     const actuator::MotorParams& motor,
                     const ControllerParams& controllers,
                     const SimConfig& config) {
  config.Validate();
  vehicle.Validate();
  controllers.Validate();
  scenario.Validate(vehicle);
  if (!motor.IsValid()) {
    throw std::invalid_argument("motor: all parameters must be > 0");
  }

  const Plant plant(scenario, vehicle, motor);
  control::PidController pid(controllers.pid, motor.voltage_limit);
  std::optional<control::PurePursuitTracker> tracker;
  if (scenario.controllers.pursuit) {
    tracker.emplace(
        control::PursuitConfig{.lookahead_gain = controllers.lookahead_gain,
                               .lookahead_min = controllers.lookahead_min,
                               .lookahead_max = controllers.lookahead_max,
                               .wheelbase = vehicle.geometry.wheelbase,
                               .steering_limit = vehicle.steering_limit});
  }

  SimState state{.pose = scenario.initial.pose,
                 .delta = scenario.initial.delta,
                 .v = scenario.initial.v,
                 .motor = {},
                 .odometer = 0.0};
  state.pose.theta = kinematics::NormalizeAngle(state.pose.theta);

  auto feedforward_at = [&](const dynamics::DisturbanceState& d) {
    if (!scenario.controllers.feedforward) return 0.0;
    return control::FeedforwardCommand(
        dynamics::GradeForce(d, vehicle.longitudinal), controllers.feedforward);
  };

  if (scenario.initial.trim && scenario.controllers.pid) {
    const dynamics::DisturbanceState d0 =
        DisturbanceAt(scenario.disturbance, state.odometer);
    const double resistance =
        dynamics::AeroForce(state.v, d0, vehicle.longitudinal) +
        dynamics::GradeForce(d0, vehicle.longitudinal);
    const double voltage =
        std::clamp(TrimVoltage(resistance, motor, vehicle.geometry),
                   -motor.voltage_limit, motor.voltage_limit);
    state.motor = actuator::MotorSteadyState(voltage, 0.0, motor);
    if (controllers.pid.ki > 0.0) {
      const double integral =
          (voltage - feedforward_at(d0)) / controllers.pid.ki;
      pid.Reset({.integral = integral});
    }
  }

  const auto steps =
      static_cast<std::int64_t>(std::llround(config.duration / config.dt));
  SimTrace trace;
  trace.rows.reserve(static_cast<std::size_t>(steps / config.log_decimation) +
                     1);

  Vector x = Pack(state);
  for (std::int64_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * config.dt;
    state = Unpack(x);
    const dynamics::DisturbanceState disturbance =
        DisturbanceAt(scenario.disturbance, state.odometer);
    const double v_ref = scenario.reference_speed.At(t);
    const double speed_error = v_ref - state.v;

    double u_pid = 0.0;
    if (scenario.controllers.pid) {
      u_pid = pid.Step(speed_error, config.dt);
    } else if (scenario.open_loop_feedthrough) {
      u_pid = v_ref;
    }
    const double u_ff = feedforward_at(disturbance);

    double steering = scenario.steering_command.At(t);
    if (tracker) {
      steering = tracker->Update(state.pose, state.v, *scenario.path).steering;
    }
    steering =
        std::clamp(steering, -vehicle.steering_limit, vehicle.steering_limit);

    if (k % config.log_decimation == 0) {
      trace.rows.push_back(
          {.t = t,
           .x = state.pose.x,
           .y = state.pose.y,
           .theta = state.pose.theta,
           .v = state.v,
           .v_ref = v_ref,
           .delta = state.delta,
           .cte = scenario.path ? CrossTrackError(state.pose, *scenario.path)
                                : 0.0,
           .e_v = speed_error,
           .u_pid = u_pid,
           .u_ff = u_ff,
           .theta_road = disturbance.road_grade});
    }
    if (k == steps) break;

    const HeldCommand command{.voltage = u_pid + u_ff, .steering = steering};
    try {
      x = IntegrateStep(
          x, [&](const Vector& s) { return plant.Derivative(s, command); },
          config.dt, config.integrator);
    } catch (const std::domain_error& e) {
      throw SimulationError(e.what(), k);
    }
    if (!AllFinite(x)) {
      throw SimulationError("non-finite state", k);
    }
    x[kTheta] = kinematics::NormalizeAngle(x[kTheta]);
  }
  return trace;
}

Metrics ComputeMetrics(const SimTrace& trace) {
  if (trace.rows.empty()) {
    throw std::invalid_argument("ComputeMetrics: empty trace");
  }
  Metrics m;
  double speed_sq = 0.0;
  double cte_sq = 0.0;
  for (const TraceRow& row : trace.rows) {
    speed_sq += row.e_v * row.e_v;
    cte_sq += row.cte * row.cte;
    m.max_speed_error = std::max(m.max_speed_error, std::abs(row.e_v));
    m.max_cte = std::max(m.max_cte, std::abs(row.cte));
  }
  const auto n = static_cast<double>(trace.rows.size());
  m.speed_rmse = std::sqrt(speed_sq / n);
  m.cte_rmse = std::sqrt(cte_sq / n);

  const double t_begin = trace.rows.front().t;
  const double t_end = trace.rows.back().t;
  const double settle_from = t_end - 0.2 * (t_end - t_begin);
  m.settled = std::all_of(
      trace.rows.begin(), trace.rows.end(), [&](const TraceRow& row) {
        return row.t < settle_from ||
               std::abs(row.e_v) <= 0.05 * std::abs(row.v_ref);
      });
  return m;
}

}  // namespace rover::sim
