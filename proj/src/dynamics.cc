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

#include "rover/dynamics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rover::dynamics {
namespace {

constexpr double kPoleTolerance = 1e-12;

Complex DriveRoot(const LongitudinalParams& p, double drive_force_op,
                  Complex s) {
  if (s == Complex(0.0, 0.0)) {
    throw std::domain_error("Gp: undefined at s = 0");
  }
  Complex radicand = 1.0 - p.mass * drive_force_op / (s * p.aero_coeff);
  // Complex division can leave -0.0 in the imaginary part for real s, which
  // would put a negative real radicand on the lower side of the branch cut.
  if (radicand.imag() == 0.0) radicand.imag(0.0);
  return std::sqrt(radicand);
}

}  // namespace

bool LongitudinalParams::IsValid() const {
  return mass > 0.0 && spring_k > 0.0 && aero_coeff > 0.0 && gravity > 0.0 &&
         drive_force_limit > 0.0;
}

double GradeForce(const DisturbanceState& disturbance,
                  const LongitudinalParams& params) {
  return params.mass * params.gravity * std::sin(disturbance.road_grade);
}

double AeroForce(double v, const DisturbanceState& disturbance,
                 const LongitudinalParams& params) {
  const double relative = v - disturbance.wind_speed;
  return params.aero_coeff * relative * std::abs(relative);
}

ForceBreakdown Forces(double v, double drive_force,
                      const DisturbanceState& disturbance,
                      const LongitudinalParams& params) {
  return {.drive = std::clamp(drive_force, -params.drive_force_limit,
                              params.drive_force_limit),
          .aero = AeroForce(v, disturbance, params),
          .grade = GradeForce(disturbance, params)};
}

double LongitudinalAccel(double v, double drive_force,
                         const DisturbanceState& disturbance,
                         const LongitudinalParams& params) {
  const ForceBreakdown f = Forces(v, drive_force, disturbance, params);
  return (f.drive - f.aero - f.grade) / params.mass;
}

Complex EvalG0(const LongitudinalParams& p, Complex s) {
  const double ratio = p.mass / p.spring_k;
  const Complex denominator = ratio * s * s + 1.0;
  if (std::abs(denominator) < kPoleTolerance) {
    throw std::domain_error("G0: pole at s = +-j sqrt(k/m)");
  }
  return (p.mass * p.gravity / p.spring_k) / denominator;
}

Complex EvalGp(const LongitudinalParams& p, double drive_force_op, Complex s) {
  return (p.aero_coeff / p.mass) * (-1.0 + DriveRoot(p, drive_force_op, s));
}

Complex EvalGff(const LongitudinalParams& p, double drive_force_op, Complex s) {
  const Complex gp = EvalGp(p, drive_force_op, s);
  if (std::abs(gp) == 0.0) {
    throw std::domain_error("Gff: drive path Gp vanishes");
  }
  return -EvalG0(p, s) / gp;
}

Complex EvalGffClosedForm(const LongitudinalParams& p, double drive_force_op,
                          Complex s) {
  const Complex gap = 1.0 - DriveRoot(p, drive_force_op, s);
  if (std::abs(gap) == 0.0) {
    throw std::domain_error("Gff: drive path Gp vanishes");
  }
  return p.mass / (p.aero_coeff * gap) * EvalG0(p, s);
}

}  // namespace rover::dynamics
