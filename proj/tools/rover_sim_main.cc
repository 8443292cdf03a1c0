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

// rover_sim run <scenario.yaml> [--out DIR] [--mode MODE] [--set key=value]...

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rover/cli/run.h"

int main(int argc, char** argv) {
  CLI::App app{
      "Longitudinal and lateral control simulator for a four-wheeled robot"};
  app.require_subcommand(1);

  rover::cli::RunRequest request;
  if (const char* env_dir = std::getenv(rover::cli::kOutputDirEnv)) {
    request.output_dir = env_dir;
  }
  std::string scenario;
  std::string output_dir;
  std::string mode = "single";

  CLI::App* run = app.add_subcommand("run", "Simulate a scenario file");
  run->add_option("scenario", scenario, "YAML scenario file")->required();
  run->add_option("--out", output_dir,
                  std::string("Output directory (default: $") +
                      rover::cli::kOutputDirEnv + " or " +
                      rover::cli::kDefaultOutputDir + ")");
  run->add_option("--mode", mode, "Run mode")
      ->check(CLI::IsMember(
          {"single", "compare_ff", "compare_controllers", "tune"}));
  run->add_option("--set", request.overrides,
                  "Override a scenario key, e.g. --set pid.kp=3.94")
      ->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rover::cli::kExitUsage;
  }

  request.scenario_file = scenario;
  if (!output_dir.empty()) request.output_dir = output_dir;
  request.mode = rover::cli::ParseMode(mode);
  return rover::cli::Execute(request, std::cout, std::cerr);
}
