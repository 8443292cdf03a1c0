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
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "rover/control/feedforward.h"
#include "rover/control/pid.h"
#include "rover/control/pure_pursuit.h"
#include "rover/control/tuning.h"
#include "rover/dynamics.h"

namespace rover::control {
namespace {

constexpr double kPi = std::numbers::pi;
using kinematics::Pose;

// --- PID -------------------------------------------------------------------

TEST(PidTest, ZeroErrorFreshState) {
  EXPECT_DOUBLE_EQ(PidStep({}, 0.0, 0.1, kDefaultSpeedGains).command, 0.0);
}

TEST(PidTest, FirstStepHasNoDerivativeKick) {
  // 3.94 * 1 + 1.52 * (1 * 0.1) + 2.51 * 0
  const PidOutput out = PidStep({}, 1.0, 0.1, kDefaultSpeedGains);
  EXPECT_NEAR(out.command, 4.092, 1e-12);
  EXPECT_TRUE(out.state.initialized);
  EXPECT_DOUBLE_EQ(out.state.prev_error, 1.0);
}

TEST(PidTest, LinearInErrorFromRest) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> e(-5.0, 5.0);
  for (int n = 0; n < 200; ++n) {
    const double err = e(rng);
    EXPECT_NEAR(PidStep({}, 2.0 * err, 0.01, kDefaultSpeedGains).command,
                2.0 * PidStep({}, err, 0.01, kDefaultSpeedGains).command,
                1e-12);
  }
}

TEST(PidTest, ProportionalOnly) {
  const PidGains p{.kp = 2.0};
  PidController pid(p, INFINITY);
  EXPECT_DOUBLE_EQ(pid.Step(1.5, 0.01), 3.0);
  EXPECT_DOUBLE_EQ(pid.Step(-0.5, 0.01), -1.0);
}

TEST(PidTest, IntegralAccumulatesBackwardEuler) {
  PidController pid({.ki = 1.0}, INFINITY);
  double u = 0.0;
  for (int n = 1; n <= 50; ++n) u = pid.Step(0.3, 0.02);
  EXPECT_NEAR(u, 50 * 0.02 * 0.3, 1e-12);
  EXPECT_NEAR(pid.state().integral, 0.3, 1e-12);
}

TEST(PidTest, DerivativeIsBackwardDifference) {
  PidController pid({.kd = 0.5}, INFINITY);
  pid.Step(1.0, 0.1);
  EXPECT_NEAR(pid.Step(1.4, 0.1), 0.5 * 4.0, 1e-12);
}

TEST(PidTest, AntiWindupFreezesIntegralWhenSaturated) {
  PidController pid({.kp = 1.0, .ki = 1.0}, 12.0);
  for (int n = 0; n < 1000; ++n) pid.Step(20.0, 0.01);
  EXPECT_DOUBLE_EQ(pid.state().integral, 0.0);
  // Once the error reverses the integral unwinds immediately.
  pid.Step(-1.0, 0.01);
  EXPECT_NEAR(pid.state().integral, -0.01, 1e-12);
}

TEST(PidTest, IntegralBoundedUnderSustainedSaturation) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> e(5.0, 50.0);
  PidController pid({.kp = 3.94, .ki = 1.52}, 12.0);
  for (int n = 0; n < 5000; ++n) pid.Step(e(rng), 0.001);
  // kp * e alone exceeds the limit, so nothing may accumulate.
  EXPECT_DOUBLE_EQ(pid.state().integral, 0.0);
}

TEST(PidTest, RejectsNonPositiveDt) {
  EXPECT_THROW(PidStep({}, 1.0, 0.0, kDefaultSpeedGains),
               std::invalid_argument);
  EXPECT_THROW(PidStep({}, 1.0, -0.1, kDefaultSpeedGains),
               std::invalid_argument);
  EXPECT_THROW(PidController({.kp = -1.0}, 1.0), std::invalid_argument);
}

// --- Ziegler-Nichols ------------------------------------------------------

TEST(CriticalParamsTest, DefaultPlant) {
  const CriticalParams c = ComputeCriticalParams({});
  EXPECT_NEAR(c.ultimate_gain, 6.54, 1e-12);
  EXPECT_NEAR(c.ultimate_period, 5.130, 5e-4);
}

TEST(CriticalParamsTest, HandEvaluated) {
  dynamics::LongitudinalParams p;
  p.mass = 1.0;
  p.spring_k = 4.0;
  p.gravity = 10.0;
  const CriticalParams c = ComputeCriticalParams(p);
  EXPECT_NEAR(c.ultimate_gain, 2.5, 1e-12);
  EXPECT_NEAR(c.ultimate_period, kPi, 1e-12);
  p.spring_k = p.mass;
  EXPECT_NEAR(ComputeCriticalParams(p).ultimate_period, 2.0 * kPi, 1e-12);
}

TEST(ZieglerNicholsTest, PidMatchesPublishedGains) {
  const ZieglerNicholsResult r =
      ZieglerNicholsTune({6.54, 5.13}, ControllerType::kPID);
  EXPECT_NEAR(r.gains.kp, 3.924, 1e-9);
  EXPECT_NEAR(r.gains.ki, 1.530, 1e-3);
  EXPECT_NEAR(r.gains.kd, 2.516, 1e-3);
  EXPECT_NEAR(r.gains.kp, 3.94, 0.02);
  EXPECT_NEAR(r.gains.ki, 1.52, 0.02);
  EXPECT_NEAR(r.gains.kd, 2.51, 0.02);
  ASSERT_TRUE(r.integral_time && r.derivative_time);
  EXPECT_NEAR(*r.integral_time, 2.565, 1e-12);
  EXPECT_NEAR(*r.derivative_time, 0.64125, 1e-12);
}

TEST(ZieglerNicholsTest, ProportionalRow) {
  const ZieglerNicholsResult r =
      ZieglerNicholsTune({1.0, 1.0}, ControllerType::kP);
  EXPECT_DOUBLE_EQ(r.gains.kp, 0.5);
  EXPECT_DOUBLE_EQ(r.gains.ki, 0.0);
  EXPECT_DOUBLE_EQ(r.gains.kd, 0.0);
  EXPECT_FALSE(r.integral_time);
  EXPECT_FALSE(r.derivative_time);
}

TEST(ZieglerNicholsTest, ProportionalDerivativeRow) {
  const ZieglerNicholsResult r =
      ZieglerNicholsTune({2.0, 4.0}, ControllerType::kPD);
  EXPECT_DOUBLE_EQ(r.gains.kp, 1.6);
  EXPECT_DOUBLE_EQ(r.gains.kd, 0.8);
  ASSERT_TRUE(r.derivative_time);
  EXPECT_DOUBLE_EQ(*r.derivative_time, 0.5);
}

TEST(ZieglerNicholsTest, GainsRelateThroughTimes) {
  // ki = kp / T_I and kd = kp * T_D on every row that has them.
  for (ControllerType t :
       {ControllerType::kPI, ControllerType::kPD, ControllerType::kPID}) {
    const ZieglerNicholsResult r = ZieglerNicholsTune({3.7, 2.2}, t);
    if (r.integral_time) {
      EXPECT_NEAR(r.gains.ki, r.gains.kp / *r.integral_time, 1e-12);
    }
    if (r.derivative_time) {
      EXPECT_NEAR(r.gains.kd, r.gains.kp * *r.derivative_time, 1e-12);
    }
  }
}

TEST(ZieglerNicholsTest, ParsesControllerNames) {
  EXPECT_EQ(ParseControllerType("pid"), ControllerType::kPID);
  EXPECT_EQ(ParseControllerType("PI"), ControllerType::kPI);
  EXPECT_THROW(ParseControllerType("PIDD"), std::invalid_argument);
  EXPECT_EQ(ControllerTypeName(ControllerType::kPD), "PD");
}

// --- Pure pursuit ----------------------------------------------------------

TEST(LookaheadTest, ClampedVelocityScaling) {
  const PursuitConfig c;
  EXPECT_DOUBLE_EQ(LookaheadDistance(0.0, c), 1.0);
  EXPECT_DOUBLE_EQ(LookaheadDistance(10.0, c), 2.0);
  EXPECT_DOUBLE_EQ(LookaheadDistance(1000.0, c), 3.0);
  EXPECT_THROW(LookaheadDistance(-1.0, c), std::invalid_argument);
}

TEST(LookaheadPointTest, Collinear) {
  const Path p({{0.0, 0.0}, {10.0, 0.0}});
  const auto hit = FindLookaheadPoint({0.0, 0.0, 0.0}, p, 2.0);
  ASSERT_TRUE(hit);
  EXPECT_NEAR(hit->point.x, 2.0, 1e-12);
  EXPECT_NEAR(hit->point.y, 0.0, 1e-12);
}

TEST(LookaheadPointTest, OffsetPoseHitsCircleLineIntersection) {
  const Path p({{-10.0, 0.0}, {10.0, 0.0}});
  const auto hit = FindLookaheadPoint({0.0, 1.0, 0.0}, p, 2.0);
  ASSERT_TRUE(hit);
  EXPECT_NEAR(hit->point.x, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(hit->point.y, 0.0, 1e-12);
}

TEST(LookaheadPointTest, OutOfReach) {
  const Path p({{0.0, 0.0}, {10.0, 0.0}});
  EXPECT_FALSE(FindLookaheadPoint({5.0, 3.0, 0.0}, p, 2.0));
}

// Oracle: march along the path from the projection and bisect the first
// crossing of the lookahead circle.
std::optional<Point2> BruteForceLookahead(const Pose& pose, const Path& path,
                                          double lookahead) {
  const Point2 c{pose.x, pose.y};
  const double start = path.Project(c).arc;
  const double step = 1e-3;
  for (double s = start; s < path.length(); s += step) {
    const double s1 = std::min(s + step, path.length());
    if ((Distance(path.PointAt(s), c) - lookahead) *
            (Distance(path.PointAt(s1), c) - lookahead) >
        0.0) {
      continue;
    }
    double lo = s, hi = s1;
    const bool rising = Distance(path.PointAt(lo), c) < lookahead;
    for (int n = 0; n < 60; ++n) {
      const double mid = 0.5 * (lo + hi);
      if ((Distance(path.PointAt(mid), c) < lookahead) == rising)
        lo = mid;
      else
        hi = mid;
    }
    return path.PointAt(0.5 * (lo + hi));
  }
  return std::nullopt;
}

TEST(LookaheadPointTest, MatchesBruteForceOnZigZag) {
  const Path p({{0.0, 0.0}, {3.0, 1.0}, {6.0, -1.0}, {9.0, 2.0}, {12.0, 0.0}});
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> x(0.0, 9.0);
  std::uniform_real_distribution<double> y(-0.8, 0.8);
  std::uniform_real_distribution<double> l(1.0, 3.0);
  int compared = 0;
  for (int n = 0; n < 200; ++n) {
    const Pose pose{x(rng), y(rng), 0.0};
    const double lookahead = l(rng);
    const auto hit = FindLookaheadPoint(pose, p, lookahead);
    const auto oracle = BruteForceLookahead(pose, p, lookahead);
    ASSERT_EQ(hit.has_value(), oracle.has_value());
    if (!hit) continue;
    ++compared;
    EXPECT_NEAR(hit->point.x, oracle->x, 1e-6);
    EXPECT_NEAR(hit->point.y, oracle->y, 1e-6);
    EXPECT_NEAR(Distance(hit->point, {pose.x, pose.y}), lookahead, 1e-9);
  }
  EXPECT_GT(compared, 100);
}

TEST(PursuitSteeringTest, DeadAheadIsStraight) {
  EXPECT_DOUBLE_EQ(UnclampedPursuitSteering({0.0, 0.0, 0.0}, {2.0, 0.0}, 1.0),
                   0.0);
}

TEST(PursuitSteeringTest, ThirtyDegreeTarget) {
  const Point2 target{2.0 * std::cos(kPi / 6), 2.0 * std::sin(kPi / 6)};
  EXPECT_NEAR(UnclampedPursuitSteering({0.0, 0.0, 0.0}, target, 1.0),
              std::atan(0.5), 1e-12);
}

TEST(PursuitSteeringTest, ChordOfCircleGivesArcCurvature) {
  // Circle of radius 5 tangent to the heading at the rear axle: every point
  // on it must produce tan(delta) = L / R.
  const double radius = 5.0;
  for (double phi = 0.05; phi < 3.0; phi += 0.05) {
    const Point2 target{radius * std::sin(phi),
                        radius - radius * std::cos(phi)};
    EXPECT_NEAR(UnclampedPursuitSteering({0.0, 0.0, 0.0}, target, 1.0),
                std::atan(1.0 / radius), 1e-12)
        << phi;
  }
}

TEST(PursuitSteeringTest, MirroredTargetFlipsSign) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int n = 0; n < 200; ++n) {
    const Point2 t{u(rng), u(rng)};
    if (std::hypot(t.x, t.y) < 1e-3) continue;
    EXPECT_NEAR(UnclampedPursuitSteering({0.0, 0.0, 0.0}, {t.x, -t.y}, 0.6),
                -UnclampedPursuitSteering({0.0, 0.0, 0.0}, t, 0.6), 1e-12);
  }
}

TEST(PursuitSteeringTest, ClampsAndRejectsCoincidentTarget) {
  const PursuitConfig c;
  EXPECT_DOUBLE_EQ(PurePursuitSteering({0.0, 0.0, 0.0}, {0.0, 1.0}, c), 0.6);
  EXPECT_DOUBLE_EQ(PurePursuitSteering({0.0, 0.0, 0.0}, {0.0, -1.0}, c), -0.6);
  EXPECT_THROW(UnclampedPursuitSteering({1.0, 1.0, 0.0}, {1.0, 1.0}, 1.0),
               std::invalid_argument);
}

TEST(PurePursuitTrackerTest, TargetArcNeverMovesBack) {
  const Path p({{0.0, 0.0}, {10.0, 0.0}, {10.0, 10.0}, {0.0, 10.0}});
  PurePursuitTracker tracker({});
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::uniform_real_distribution<double> speed(0.0, 15.0);
  double last_target = 0.0, last_progress = 0.0;
  for (int n = 0; n < 300; ++n) {
    const double s = std::min(0.1 * n, p.length());
    const Point2 q = p.PointAt(s);
    const auto cmd = tracker.Update({q.x + jitter(rng), q.y + jitter(rng), 0.0},
                                    speed(rng), p);
    EXPECT_GE(tracker.progress_arc(), last_progress);
    last_progress = tracker.progress_arc();
    if (!cmd.fallback) {
      EXPECT_GE(cmd.target_arc, last_target);
      last_target = cmd.target_arc;
    }
    EXPECT_LE(std::abs(cmd.steering), 0.6);
  }
}

TEST(PurePursuitTrackerTest, FallsBackToPathWhenFarAway) {
  const Path p({{0.0, 0.0}, {10.0, 0.0}});
  PurePursuitTracker tracker({});
  const auto cmd = tracker.Update({5.0, 20.0, -kPi / 2}, 0.0, p);
  EXPECT_TRUE(cmd.fallback);
  EXPECT_NEAR(cmd.target.x, 5.0, 1e-12);
  EXPECT_NEAR(cmd.target.y, 0.0, 1e-12);
  EXPECT_NEAR(cmd.steering, 0.0, 1e-12);
}

TEST(PurePursuitTrackerTest, HeadsForEndPastTheLastCircleHit) {
  const Path p({{0.0, 0.0}, {10.0, 0.0}});
  PurePursuitTracker tracker({});
  const auto cmd = tracker.Update({9.5, 0.2, 0.0}, 0.0, p);
  EXPECT_TRUE(cmd.fallback);
  EXPECT_EQ(cmd.target, (Point2{10.0, 0.0}));
}

// --- Feedforward -----------------------------------------------------------

TEST(FeedforwardTest, ScalesGradeForce) {
  EXPECT_NEAR(FeedforwardCommand(17.10, {}), 0.03762, 1e-12);
  EXPECT_DOUBLE_EQ(FeedforwardCommand(0.0, {}), 0.0);
  EXPECT_DOUBLE_EQ(FeedforwardCommand(2.0 * 13.3, {}),
                   2.0 * FeedforwardCommand(13.3, {}));
}

}  // namespace
}  // namespace rover::control
