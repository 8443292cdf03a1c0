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

#ifndef ROVER_CONTROL_FEEDFORWARD_H_
#define ROVER_CONTROL_FEEDFORWARD_H_

namespace rover::control {

struct FeedforwardConfig {
  double kff = 0.0022;  // command per newton of measured disturbance
};

/// Static disturbance compensation added to the feedback command. A positive
/// disturbance force (resisting motion, e.g. climbing) yields a positive
/// command.
inline double FeedforwardCommand(double disturbance_force,
                                 const FeedforwardConfig& config) {
  return config.kff * disturbance_force;
}

}  // namespace rover::control

#endif  // ROVER_CONTROL_FEEDFORWARD_H_
