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

#ifndef ROVER_CLI_RUN_H_
#define ROVER_CLI_RUN_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rover::cli {

enum class Mode { kSingle, kCompareFf, kCompareControllers, kTune };

/// Throws std::invalid_argument for an unrecognised mode name.
Mode ParseMode(std::string_view name);
std::string_view ModeName(Mode mode);

/// Environment variable consulted for the output directory when none is
/// given on the command line.
inline constexpr const char* kOutputDirEnv = "ROVER_SIM_OUT";
inline constexpr const char* kDefaultOutputDir = "rover_out";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitConfig = 3,
  kExitSimulation = 4,
  kExitOutput = 5,
};

struct RunRequest {
  std::filesystem::path scenario_file;
  std::filesystem::path output_dir = kDefaultOutputDir;
  Mode mode = Mode::kSingle;
  std::vector<std::string> overrides;  // key=value
};

/// Runs the request, writing artifacts under `output_dir` and a short
/// summary to `out`. Errors are reported on `err` and mapped to an
/// ExitCode.
///
///   single               trace.csv
///   compare_ff           trace_ff_on.csv, trace_ff_off.csv
///   compare_controllers  trace_controllers_on.csv, trace_controllers_off.csv
///   tune                 tune.txt (no simulation)
///
/// Simulating modes also write metrics.txt and plot.gp.
int Execute(const RunRequest& request, std::ostream& out, std::ostream& err);

}  // namespace rover::cli

#endif  // ROVER_CLI_RUN_H_
