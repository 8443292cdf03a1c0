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

#include "rover/cli/run.h"

#include <fmt/format.h>

#include <fstream>
#include <future>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <utility>

#include "rover/cli/outputs.h"
#include "rover/cli/scenario_file.h"
#include "rover/control/tuning.h"
#include "rover/sim/simulator.h"

namespace rover::cli {
namespace {

sim::SimTrace Simulate(const ScenarioBundle& b, const sim::Scenario& scenario) {
  return sim::RunScenario(scenario, b.vehicle, b.motor, b.controllers,
                          b.config);
}

void PrintMetrics(std::ostream& out, std::string_view label,
                  const sim::Metrics& m) {
  out << fmt::format(
      "{}: speed_rmse={:.4f} max_speed_error={:.4f} cte_rmse={:.4f} "
      "max_cte={:.4f} settled={}\n",
      label, m.speed_rmse, m.max_speed_error, m.cte_rmse, m.max_cte,
      m.settled ? "true" : "false");
}

// Runs two variants of the scenario side by side and writes both traces.
void RunPair(const ScenarioBundle& b, const sim::Scenario& first,
             const sim::Scenario& second, const std::string& first_label,
             const std::string& second_label, const std::filesystem::path& dir,
             std::ostream& out) {
  auto first_run =
      std::async(std::launch::async, [&] { return Simulate(b, first); });
  const sim::SimTrace second_trace = Simulate(b, second);
  const sim::SimTrace first_trace = first_run.get();

  const sim::Metrics first_metrics = sim::ComputeMetrics(first_trace);
  const sim::Metrics second_metrics = sim::ComputeMetrics(second_trace);
  const double ratio =
      first_metrics.max_speed_error / second_metrics.max_speed_error;

  KeyValues metrics{{"scenario", b.name}};
  AppendMetrics(metrics, first_label, first_metrics);
  AppendMetrics(metrics, second_label, second_metrics);
  metrics.emplace_back("peak_error_ratio", FormatNumber(ratio));

  EmitOutputs(dir,
              {{"trace_" + first_label + ".csv", first_label, &first_trace},
               {"trace_" + second_label + ".csv", second_label, &second_trace}},
              metrics);

  PrintMetrics(out, first_label, first_metrics);
  PrintMetrics(out, second_label, second_metrics);
  out << fmt::format("peak_error_ratio={:.6f} ({} / {})\n", ratio, first_label,
                     second_label);
}

void RunSingle(const ScenarioBundle& b, const std::filesystem::path& dir,
               std::ostream& out) {
  const sim::SimTrace trace = Simulate(b, b.scenario);
  const sim::Metrics m = sim::ComputeMetrics(trace);
  KeyValues metrics{{"scenario", b.name}};
  AppendMetrics(metrics, "", m);
  EmitOutputs(dir, {{"trace.csv", b.name, &trace}}, metrics);
  PrintMetrics(out, b.name, m);
}

void RunTune(const ScenarioBundle& b, const std::filesystem::path& dir,
             std::ostream& out) {
  const control::CriticalParams critical =
      control::ComputeCriticalParams(b.vehicle.longitudinal);
  const control::ZieglerNicholsResult zn =
      control::ZieglerNicholsTune(critical, b.tune_type);

  out << fmt::format("k_U={:.3f}\n", critical.ultimate_gain)
      << fmt::format("T_U={:.3f}\n", critical.ultimate_period)
      << "controller=" << control::ControllerTypeName(b.tune_type) << '\n'
      << fmt::format("kp={:.3f}\n", zn.gains.kp)
      << fmt::format("ki={:.3f}\n", zn.gains.ki)
      << fmt::format("kd={:.3f}\n", zn.gains.kd);
  if (zn.integral_time) out << fmt::format("T_I={:.3f}\n", *zn.integral_time);
  if (zn.derivative_time) {
    out << fmt::format("T_D={:.3f}\n", *zn.derivative_time);
  }

  KeyValues values{
      {"k_U", FormatNumber(critical.ultimate_gain)},
      {"T_U", FormatNumber(critical.ultimate_period)},
      {"controller", std::string(control::ControllerTypeName(b.tune_type))},
      {"kp", FormatNumber(zn.gains.kp)},
      {"ki", FormatNumber(zn.gains.ki)},
      {"kd", FormatNumber(zn.gains.kd)}};
  if (zn.integral_time)
    values.emplace_back("T_I", FormatNumber(*zn.integral_time));
  if (zn.derivative_time) {
    values.emplace_back("T_D", FormatNumber(*zn.derivative_time));
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw OutputError("cannot create '" + dir.string() + "'");
  std::ofstream file(dir / "tune.txt", std::ios::binary | std::ios::trunc);
  WriteKeyValues(file, values);
  if (!file) throw OutputError("failed writing tune.txt");
}

}  // namespace

Mode ParseMode(std::string_view name) {
  if (name == "single") return Mode::kSingle;
  if (name == "compare_ff") return Mode::kCompareFf;
  if (name == "compare_controllers") return Mode::kCompareControllers;
  if (name == "tune") return Mode::kTune;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kSingle:
      return "single";
    case Mode::kCompareFf:
      return "compare_ff";
    case Mode::kCompareControllers:
      return "compare_controllers";
    case Mode::kTune:
      return "tune";
  }
  return "?";
}

int Execute(const RunRequest& request, std::ostream& out, std::ostream& err) {
  ScenarioBundle bundle;
  try {
    bundle = LoadScenario(request.scenario_file, request.overrides);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    switch (request.mode) {
      case Mode::kSingle:
        RunSingle(bundle, request.output_dir, out);
        break;
      case Mode::kCompareFf: {
        sim::Scenario on = bundle.scenario;
        sim::Scenario off = bundle.scenario;
        on.controllers.feedforward = true;
        off.controllers.feedforward = false;
        RunPair(bundle, on, off, "ff_on", "ff_off", request.output_dir, out);
        break;
      }
      case Mode::kCompareControllers: {
        sim::Scenario off = bundle.scenario;
        off.controllers = {
            .pid = false, .feedforward = false, .pursuit = false};
        RunPair(bundle, bundle.scenario, off, "controllers_on",
                "controllers_off", request.output_dir, out);
        break;
      }
      case Mode::kTune:
        RunTune(bundle, request.output_dir, out);
        break;
    }
  } catch (const sim::SimulationError& e) {
    err << "simulation error: " << e.what() << '\n';
    return kExitSimulation;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << '\n';
    return kExitOutput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace rover::cli
