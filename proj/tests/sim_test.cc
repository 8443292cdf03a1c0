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

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gtest/gtest.h"
#include "rover/kinematics.h"
#include "rover/sim/integrator.h"
#include "rover/sim/profile.h"
#include "rover/sim/scenario.h"
#include "rover/sim/simulator.h"

namespace rover::sim {
namespace {

constexpr double kPi = std::numbers::pi;

// --- Integrator ------------------------------------------------------------

TEST(IntegratorTest, ZeroDerivativeKeepsState) {
  const StateVector<3> x{1.0, -2.0, 3.0};
  auto zero = [](const StateVector<3>&) { return StateVector<3>{}; };
  for (Integrator m : {Integrator::kEuler, Integrator::kRk4}) {
    EXPECT_EQ(IntegrateStep(x, zero, 0.1, m), x);
  }
}

TEST(IntegratorTest, ConstantDerivativeIsExact) {
  const StateVector<2> x{1.0, 2.0};
  auto constant = [](const StateVector<2>&) {
    return StateVector<2>{0.5, -4.0};
  };
  for (Integrator m : {Integrator::kEuler, Integrator::kRk4}) {
    const StateVector<2> next = IntegrateStep(x, constant, 0.25, m);
    EXPECT_DOUBLE_EQ(next[0], 1.125);
    EXPECT_DOUBLE_EQ(next[1], 1.0);
  }
}

StateVector<2> Oscillator(const StateVector<2>& s) { return {s[1], -s[0]}; }

TEST(IntegratorTest, Rk4HarmonicOscillatorOnePeriod) {
  StateVector<2> x{1.0, 0.0};
  const double dt = 0.01;
  const int steps = static_cast<int>(std::lround(2.0 * kPi / dt));
  for (int n = 0; n < steps; ++n) {
    x = IntegrateStep(x, Oscillator, dt, Integrator::kRk4);
  }
  const double t = steps * dt;
  EXPECT_LT(std::abs(x[0] - std::cos(t)), 1e-6);
  EXPECT_LT(std::abs(x[1] + std::sin(t)), 1e-6);
}

TEST(IntegratorTest, Rk4EnergyDriftPerPeriod) {
  StateVector<2> x{1.0, 0.0};
  const double dt = 1e-3;
  const int per_period = static_cast<int>(std::lround(2.0 * kPi / dt));
  for (int period = 1; period <= 10; ++period) {
    for (int n = 0; n < per_period; ++n) {
      x = IntegrateStep(x, Oscillator, dt, Integrator::kRk4);
    }
    const double energy = 0.5 * (x[0] * x[0] + x[1] * x[1]);
    EXPECT_LT(std::abs(energy - 0.5) / 0.5, 1e-3 * period);
  }
}

TEST(IntegratorTest, ConvergenceOrders) {
  // Error at t = 1 against cos(t), halving dt.
  auto error = [](double dt, Integrator m) {
    StateVector<2> x{1.0, 0.0};
    const int steps = static_cast<int>(std::lround(1.0 / dt));
    for (int n = 0; n < steps; ++n) x = IntegrateStep(x, Oscillator, dt, m);
    return std::abs(x[0] - std::cos(1.0));
  };
  const double euler =
      error(0.01, Integrator::kEuler) / error(0.005, Integrator::kEuler);
  const double rk4 =
      error(0.1, Integrator::kRk4) / error(0.05, Integrator::kRk4);
  EXPECT_NEAR(euler, 2.0, 0.1);
  EXPECT_NEAR(rk4, 16.0, 1.5);
}

TEST(IntegratorTest, RejectsBadInput) {
  const StateVector<2> x{1.0, 0.0};
  EXPECT_THROW(IntegrateStep(x, Oscillator, 0.0, Integrator::kRk4),
               std::invalid_argument);
  auto nan = [](const StateVector<2>&) { return StateVector<2>{NAN, 0.0}; };
  EXPECT_THROW(IntegrateStep(x, nan, 0.1, Integrator::kEuler),
               std::domain_error);
  EXPECT_EQ(ParseIntegrator("rk4"), Integrator::kRk4);
  EXPECT_EQ(ParseIntegrator("euler"), Integrator::kEuler);
  EXPECT_THROW(ParseIntegrator("rk45"), std::invalid_argument);
}

// --- Profiles and presets --------------------------------------------------

TEST(ProfileTest, LinearMidpointAndHold) {
  const DisturbanceProfile d{
      .grade = Profile({{0.0, 0.0}, {100.0, 0.0873}}, Interpolation::kLinear)};
  EXPECT_NEAR(DisturbanceAt(d, 50.0).road_grade, 0.04365, 1e-12);
  EXPECT_DOUBLE_EQ(DisturbanceAt(d, 200.0).road_grade, 0.0873);
  EXPECT_DOUBLE_EQ(DisturbanceAt(d, -5.0).road_grade, 0.0);
  EXPECT_DOUBLE_EQ(DisturbanceAt({}, 123.0).road_grade, 0.0);
}

TEST(ProfileTest, HoldInterpolation) {
  const Profile p({{0.0, 0.0}, {5.0, 0.5}, {7.0, 0.0}}, Interpolation::kHold);
  EXPECT_DOUBLE_EQ(p.At(4.999), 0.0);
  EXPECT_DOUBLE_EQ(p.At(5.0), 0.5);
  EXPECT_DOUBLE_EQ(p.At(6.9), 0.5);
  EXPECT_DOUBLE_EQ(p.At(100.0), 0.0);
}

TEST(ProfileTest, RejectsBadTables) {
  EXPECT_THROW(Profile({}, Interpolation::kLinear), std::invalid_argument);
  EXPECT_THROW(Profile({{1.0, 0.0}, {1.0, 2.0}}, Interpolation::kLinear),
               std::invalid_argument);
  EXPECT_THROW(Profile({{0.0, INFINITY}}, Interpolation::kLinear),
               std::invalid_argument);
}

TEST(ProfileTest, HillIsFiveDegreesEachWay) {
  const Profile hill = HillGradeProfile();
  const double five = 5.0 * kPi / 180.0;
  EXPECT_NEAR(hill.MaxValue(), five, 1e-12);
  EXPECT_NEAR(hill.MinValue(), -five, 1e-12);
  EXPECT_DOUBLE_EQ(hill.At(0.0), 0.0);
  EXPECT_DOUBLE_EQ(hill.At(1000.0), 0.0);
}

TEST(PresetPathTest, CircleWaypointsLieOnCircle) {
  const Path c = CirclePath(10.0, 1.0, 0.1);
  for (const Point2& p : c.waypoints()) {
    EXPECT_NEAR(std::hypot(p.x, p.y), 10.0, 1e-9);
  }
  EXPECT_NEAR(c.length(), 2.0 * kPi * 10.0, 0.01);
}

TEST(PresetPathTest, LaneChangeEndsInOtherLane) {
  const Path lane = LaneChangePath();
  EXPECT_DOUBLE_EQ(lane.waypoints().front().y, 0.0);
  EXPECT_NEAR(lane.waypoints().back().y, 3.5, 1e-12);
}

// --- Cross-track error -----------------------------------------------------

TEST(CrossTrackErrorTest, SignedPerpendicularDistance) {
  const Path p({{0.0, 0.0}, {10.0, 0.0}});
  EXPECT_DOUBLE_EQ(CrossTrackError({5.0, 1.0, 0.3}, p), 1.0);
  EXPECT_DOUBLE_EQ(CrossTrackError({5.0, -1.0, 0.3}, p), -1.0);
  EXPECT_DOUBLE_EQ(CrossTrackError({5.0, 0.0, 0.0}, p), 0.0);
}

// --- Metrics ---------------------------------------------------------------

TraceRow Row(double t, double e_v, double v_ref = 1.0, double cte = 0.0) {
  return {.t = t, .v = v_ref - e_v, .v_ref = v_ref, .cte = cte, .e_v = e_v};
}

TEST(MetricsTest, HandRms) {
  const Metrics m = ComputeMetrics({{Row(0.0, 0.3), Row(1.0, 0.4)}});
  EXPECT_NEAR(m.speed_rmse, std::sqrt(0.125), 1e-15);
  EXPECT_NEAR(m.speed_rmse, 0.35355, 1e-5);
  EXPECT_DOUBLE_EQ(m.max_speed_error, 0.4);
}

TEST(MetricsTest, DuplicatingRowsKeepsRms) {
  SimTrace a, b;
  for (int i = 0; i < 37; ++i) {
    const TraceRow r = Row(0.1 * i, std::sin(i), 2.0, std::cos(3.0 * i));
    a.rows.push_back(r);
    b.rows.push_back(r);
    b.rows.push_back(r);
  }
  const Metrics ma = ComputeMetrics(a), mb = ComputeMetrics(b);
  EXPECT_NEAR(ma.speed_rmse, mb.speed_rmse, 1e-14);
  EXPECT_NEAR(ma.cte_rmse, mb.cte_rmse, 1e-14);
  EXPECT_DOUBLE_EQ(ma.max_cte, mb.max_cte);
}

TEST(MetricsTest, PerfectTrackingSettles) {
  SimTrace t;
  for (int i = 0; i <= 100; ++i) t.rows.push_back(Row(0.1 * i, 0.0, 5.0));
  const Metrics m = ComputeMetrics(t);
  EXPECT_DOUBLE_EQ(m.speed_rmse, 0.0);
  EXPECT_DOUBLE_EQ(m.max_cte, 0.0);
  EXPECT_TRUE(m.settled);
}

TEST(MetricsTest, SettledLooksOnlyAtFinalFifth) {
  SimTrace t;
  for (int i = 0; i <= 100; ++i) {
    t.rows.push_back(Row(i, i < 79 ? 3.0 : 0.2, 5.0));
  }
  EXPECT_TRUE(ComputeMetrics(t).settled);
  t.rows.back().e_v = 0.3;
  EXPECT_FALSE(ComputeMetrics(t).settled);
  EXPECT_THROW(ComputeMetrics({}), std::invalid_argument);
}

// --- Closed-loop runs ------------------------------------------------------

struct SimCase {
  Scenario scenario;
  VehicleParams vehicle;
  actuator::MotorParams motor;
  ControllerParams controllers;
  SimConfig config;

  SimTrace Run() const {
    return RunScenario(scenario, vehicle, motor, controllers, config);
  }
};

SimCase Cruise(double speed, double duration) {
  SimCase s;
  s.scenario.reference_speed = Profile::Constant(speed);
  s.scenario.initial.v = speed;
  s.config.duration = duration;
  return s;
}

TEST(RunScenarioTest, ZeroDurationLogsInitialRow) {
  SimCase s = Cruise(3.0, 0.0);
  s.scenario.initial.pose = {1.0, 2.0, 0.5};
  const SimTrace t = s.Run();
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_DOUBLE_EQ(t.rows[0].x, 1.0);
  EXPECT_DOUBLE_EQ(t.rows[0].y, 2.0);
  EXPECT_DOUBLE_EQ(t.rows[0].v, 3.0);
}

TEST(RunScenarioTest, ValidationNamesField) {
  SimCase s = Cruise(3.0, 1.0);
  s.config.dt = -0.1;
  try {
    s.Run();
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("dt", 0), 0u) << e.what();
  }
  s = Cruise(3.0, 1.0);
  s.scenario.controllers.pursuit = true;
  EXPECT_THROW(s.Run(), std::invalid_argument);  // no path
}

TEST(RunScenarioTest, FlatCruiseHoldsSpeed) {
  const SimTrace t = Cruise(10.0, 30.0).Run();
  for (const TraceRow& r : t.rows) {
    EXPECT_NEAR(r.v, 10.0, 0.5) << "t=" << r.t;
  }
  EXPECT_TRUE(ComputeMetrics(t).settled);
}

TEST(RunScenarioTest, HillFeedforwardReducesPeakError) {
  SimCase s = Cruise(10.0, 45.0);
  s.scenario.disturbance.grade = HillGradeProfile();
  SimCase off = s;
  off.scenario.controllers.feedforward = false;
  const double with_ff = ComputeMetrics(s.Run()).max_speed_error;
  const double without = ComputeMetrics(off.Run()).max_speed_error;
  EXPECT_GT(without, 0.0);
  EXPECT_LT(with_ff, without);
}

TEST(RunScenarioTest, BitIdenticalReruns) {
  SimCase s = Cruise(2.5, 10.0);
  s.scenario.steering_command =
      Profile({{0.0, 0.0}, {2.0, 0.5}, {4.0, 0.0}}, Interpolation::kHold);
  const SimTrace a = s.Run(), b = s.Run();
  ASSERT_EQ(a.rows.size(), b.rows.size());
  EXPECT_EQ(std::memcmp(a.rows.data(), b.rows.data(),
                        a.rows.size() * sizeof(TraceRow)),
            0);
}

TEST(RunScenarioTest, CoastingDecaysMonotonically) {
  SimCase s = Cruise(0.0, 20.0);
  s.scenario.initial.v = 5.0;
  s.scenario.controllers = {.pid = false, .feedforward = false};
  s.scenario.open_loop_feedthrough = false;
  const SimTrace t = s.Run();
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    EXPECT_LE(t.rows[i].v, t.rows[i - 1].v);
    EXPECT_GE(t.rows[i].v, 0.0);
  }
  // Quadratic drag alone: v(t) = v0 / (1 + c_a v0 t / m) = 5 / 3.5.
  EXPECT_NEAR(t.rows.back().v, 5.0 / 3.5, 1e-9);
}

TEST(RunScenarioTest, LaneChangeTrackedClosely) {
  SimCase s = Cruise(5.0, 40.0);
  s.scenario.path = LaneChangePath();
  s.scenario.controllers.pursuit = true;
  const Metrics m = ComputeMetrics(s.Run());
  EXPECT_LT(m.max_cte, 0.1);
}

TEST(RunScenarioTest, ResidualsOfLoggedStatesVanish) {
  // Every logged state, differentiated through the bicycle model and mapped
  // to wheel speeds, satisfies the rolling constraints.
  SimCase s = Cruise(2.5, 20.0);
  s.scenario.steering_command = Profile(
      {{0.0, 0.0}, {5.0, 0.5}, {7.0, 0.0}, {12.0, -0.4}}, Interpolation::kHold);
  const kinematics::RobotGeometry g = s.vehicle.geometry;
  for (const TraceRow& r : s.Run().rows) {
    const kinematics::BicycleRate rate = kinematics::BicycleDerivatives(
        {{r.x, r.y, r.theta}, r.delta}, r.v, 0.0, g);
    const kinematics::ChassisTwist twist =
        kinematics::BicycleTwist(r.v, r.delta, g);
    const kinematics::ConstraintResidual res = kinematics::ConstraintResiduals(
        {rate.x_dot, rate.y_dot, rate.theta_dot}, r.theta,
        kinematics::InverseKinematics(twist, g), g);
    EXPECT_LT(res.MaxAbs(), 1e-9);
  }
}

// Open-loop run with smooth dynamics: constant voltage, constant steering
// already at its commanded value, no saturation. Differences between
// successive halvings of dt shrink by 2^order.
double ConvergenceRatio(Integrator integrator, double dt) {
  auto final_row = [&](double step) {
    SimCase s;
    s.scenario.reference_speed = Profile::Constant(1.0);  // volts
    s.scenario.controllers = {.pid = false, .feedforward = false};
    s.scenario.steering_command = Profile::Constant(0.2);
    s.scenario.initial.delta = 0.2;
    s.config.duration = 2.0;
    s.config.dt = step;
    s.config.integrator = integrator;
    s.config.log_decimation = 1;
    return s.Run().rows.back();
  };
  const TraceRow a = final_row(dt), b = final_row(dt / 2),
                 c = final_row(dt / 4);
  return std::hypot(a.x - b.x, a.y - b.y) / std::hypot(b.x - c.x, b.y - c.y);
}

TEST(RunScenarioTest, EulerIsFirstOrder) {
  EXPECT_NEAR(ConvergenceRatio(Integrator::kEuler, 0.002), 2.0, 0.2);
}

TEST(RunScenarioTest, Rk4IsFourthOrder) {
  EXPECT_NEAR(ConvergenceRatio(Integrator::kRk4, 0.004), 16.0, 2.0);
}

}  // namespace
}  // namespace rover::sim
