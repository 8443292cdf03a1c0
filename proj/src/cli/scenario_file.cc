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

#include "rover/cli/scenario_file.h"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "rover/sim/profile.h"

namespace rover::cli {
namespace {

std::string Join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

double AsNumber(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected a number");
  double value = 0.0;
  try {
    value = node.as<double>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field, "expected a number, got '" + node.Scalar() + "'");
  }
  if (!std::isfinite(value)) throw ConfigError(field, "must be finite");
  return value;
}

bool AsBool(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected true or false");
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field,
                      "expected true or false, got '" + node.Scalar() + "'");
  }
}

std::string AsString(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected a string");
  return node.Scalar();
}

// Reads the keys of one YAML mapping and rejects whatever is left over.
class MapReader {
 public:
  MapReader(const YAML::Node& node, std::string prefix)
      : node_(node), prefix_(std::move(prefix)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ConfigError(prefix_.empty() ? "<root>" : prefix_,
                        "expected a mapping");
    }
  }

  std::optional<YAML::Node> Take(const std::string& key) {
    seen_.insert(key);
    if (!node_ || !node_.IsMap()) return std::nullopt;
    const YAML::Node child = node_[key];
    if (!child || child.IsNull()) return std::nullopt;
    return child;
  }

  void Read(const std::string& key, double& out) {
    if (auto n = Take(key)) out = AsNumber(*n, Join(prefix_, key));
  }
  void Read(const std::string& key, bool& out) {
    if (auto n = Take(key)) out = AsBool(*n, Join(prefix_, key));
  }
  void Read(const std::string& key, int& out) {
    if (auto n = Take(key)) {
      const double value = AsNumber(*n, Join(prefix_, key));
      if (value != std::floor(value)) {
        throw ConfigError(Join(prefix_, key), "expected an integer");
      }
      out = static_cast<int>(value);
    }
  }

  std::string Field(const std::string& key) const { return Join(prefix_, key); }

  void Finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& entry : node_) {
      const std::string key = entry.first.as<std::string>();
      if (!seen_.contains(key))
        throw ConfigError(Join(prefix_, key), "unknown key");
    }
  }

 private:
  YAML::Node node_;
  std::string prefix_;
  std::set<std::string> seen_;
};

std::vector<sim::Profile::Breakpoint> ReadPairs(const YAML::Node& node,
                                                const std::string& field) {
  std::vector<sim::Profile::Breakpoint> pairs;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string item = field + "[" + std::to_string(i) + "]";
    const YAML::Node pair = node[i];
    if (!pair.IsSequence() || pair.size() != 2) {
      throw ConfigError(item, "expected a [a, b] pair");
    }
    pairs.push_back({AsNumber(pair[0], item), AsNumber(pair[1], item)});
  }
  return pairs;
}

sim::Profile ReadProfile(const YAML::Node& node, const std::string& field,
                         sim::Interpolation interpolation) {
  if (node.IsScalar()) return sim::Profile::Constant(AsNumber(node, field));
  if (!node.IsSequence()) {
    throw ConfigError(field, "expected a number or a list of [a, b] pairs");
  }
  try {
    return sim::Profile(ReadPairs(node, field), interpolation);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

Path ReadPath(const YAML::Node& node, const std::string& field) {
  try {
    if (node.IsScalar()) {
      const std::string preset = node.Scalar();
      if (preset == "straight") return sim::StraightPath(1000.0);
      if (preset == "lane_change") return sim::LaneChangePath();
      if (preset == "circle") return sim::CirclePath(10.0);
      throw ConfigError(field,
                        "unknown preset '" + preset +
                            "' (expected straight, lane_change, circle)");
    }
    if (node.IsSequence()) {
      std::vector<Point2> points;
      for (const auto& p : ReadPairs(node, field))
        points.push_back({p.at, p.value});
      return Path(std::move(points));
    }
    MapReader reader(node, field);
    const auto preset_node = reader.Take("preset");
    if (!preset_node) throw ConfigError(field + ".preset", "required");
    const std::string preset = AsString(*preset_node, field + ".preset");
    double spacing = 1.0;
    if (preset == "straight") {
      double length = 1000.0;
      reader.Read("length", length);
      reader.Read("spacing", spacing);
      reader.Finish();
      return sim::StraightPath(length, spacing);
    }
    if (preset == "lane_change") {
      double lane_offset = 3.5;
      double transition = 30.0;
      double lead_in = 50.0;
      double length = 300.0;
      reader.Read("lane_offset", lane_offset);
      reader.Read("transition", transition);
      reader.Read("lead_in", lead_in);
      reader.Read("length", length);
      reader.Read("spacing", spacing);
      reader.Finish();
      return sim::LaneChangePath(lane_offset, transition, lead_in, length,
                                 spacing);
    }
    if (preset == "circle") {
      double radius = 10.0;
      double laps = 3.0;
      spacing = 0.1;
      reader.Read("radius", radius);
      reader.Read("laps", laps);
      reader.Read("spacing", spacing);
      reader.Finish();
      return sim::CirclePath(radius, laps, spacing);
    }
    throw ConfigError(field + ".preset", "unknown preset '" + preset + "'");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

sim::Profile ReadGrade(const YAML::Node& node, const std::string& field) {
  if (node.IsScalar()) {
    const std::string name = node.Scalar();
    if (name == "flat") return sim::Profile::Constant(0.0);
    if (name == "hill") return sim::HillGradeProfile();
  }
  return ReadProfile(node, field, sim::Interpolation::kLinear);
}

void ApplyOverride(YAML::Node& root, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError(assignment, "override must have the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  YAML::Node value;
  try {
    value = YAML::Load(assignment.substr(eq + 1));
  } catch (const YAML::Exception& e) {
    throw ConfigError(key,
                      std::string("malformed override value: ") + e.what());
  }
  if (!value || value.IsNull())
    throw ConfigError(key, "override value is empty");

  YAML::Node cursor = root;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ConfigError(key, "malformed override key");
    if (dot == std::string::npos) {
      cursor[part] = value;
      return;
    }
    YAML::Node child = cursor[part];
    if (!child.IsMap()) {
      cursor[part] = YAML::Node(YAML::NodeType::Map);
    }
    cursor.reset(cursor[part]);
    start = dot + 1;
  }
}

// Validation errors from the simulation structs read "field: rule".
template <typename Fn>
void Validated(Fn&& validate) {
  try {
    validate();
  } catch (const std::invalid_argument& e) {
    const std::string message = e.what();
    const auto colon = message.find(": ");
    if (colon == std::string::npos) throw ConfigError("<scenario>", message);
    throw ConfigError(message.substr(0, colon), message.substr(colon + 2));
  }
}

ScenarioBundle FromYaml(const YAML::Node& root) {
  ScenarioBundle b;
  MapReader top(root, "");

  if (auto n = top.Take("name")) b.name = AsString(*n, "name");
  top.Read("duration", b.config.duration);
  top.Read("dt", b.config.dt);
  top.Read("log_decimation", b.config.log_decimation);
  if (auto n = top.Take("integrator")) {
    try {
      b.config.integrator = sim::ParseIntegrator(AsString(*n, "integrator"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("integrator", e.what());
    }
  }
  if (auto n = top.Take("reference_speed")) {
    b.scenario.reference_speed =
        ReadProfile(*n, "reference_speed", sim::Interpolation::kLinear);
  }
  if (auto n = top.Take("steering_command")) {
    b.scenario.steering_command =
        ReadProfile(*n, "steering_command", sim::Interpolation::kHold);
  }
  top.Read("open_loop_feedthrough", b.scenario.open_loop_feedthrough);
  if (auto n = top.Take("path")) b.scenario.path = ReadPath(*n, "path");

  {
    MapReader r(top.Take("controllers").value_or(YAML::Node()), "controllers");
    r.Read("pid", b.scenario.controllers.pid);
    r.Read("feedforward", b.scenario.controllers.feedforward);
    r.Read("pursuit", b.scenario.controllers.pursuit);
    r.Finish();
  }
  {
    MapReader r(top.Take("initial").value_or(YAML::Node()), "initial");
    sim::InitialState& init = b.scenario.initial;
    r.Read("x", init.pose.x);
    r.Read("y", init.pose.y);
    r.Read("theta", init.pose.theta);
    r.Read("v", init.v);
    r.Read("delta", init.delta);
    r.Read("trim", init.trim);
    r.Finish();
  }
  {
    MapReader r(top.Take("disturbance").value_or(YAML::Node()), "disturbance");
    if (auto n = r.Take("grade")) {
      b.scenario.disturbance.grade = ReadGrade(*n, r.Field("grade"));
    }
    r.Read("wind_speed", b.scenario.disturbance.wind_speed);
    r.Finish();
  }
  {
    MapReader r(top.Take("robot").value_or(YAML::Node()), "robot");
    sim::VehicleParams& v = b.vehicle;
    r.Read("mass", v.longitudinal.mass);
    r.Read("spring_k", v.longitudinal.spring_k);
    r.Read("aero_coeff", v.longitudinal.aero_coeff);
    r.Read("gravity", v.longitudinal.gravity);
    r.Read("drive_force_limit", v.longitudinal.drive_force_limit);
    r.Read("wheel_radius", v.geometry.wheel_radius);
    r.Read("half_track", v.geometry.half_track);
    r.Read("wheelbase", v.geometry.wheelbase);
    r.Read("steering_limit", v.steering_limit);
    r.Read("steering_rate_limit", v.steering_rate_limit);
    r.Read("steering_time_constant", v.steering_time_constant);
    r.Finish();
  }
  {
    MapReader r(top.Take("motor").value_or(YAML::Node()), "motor");
    actuator::MotorParams& m = b.motor;
    r.Read("resistance", m.resistance);
    r.Read("inductance", m.inductance);
    r.Read("inertia", m.inertia);
    r.Read("torque_const", m.torque_const);
    r.Read("emf_const", m.emf_const);
    r.Read("gear_ratio", m.gear_ratio);
    r.Read("damping", m.damping);
    r.Read("voltage_limit", m.voltage_limit);
    r.Finish();
    const std::pair<const char*, double> fields[] = {
        {"resistance", m.resistance}, {"inductance", m.inductance},
        {"inertia", m.inertia},       {"torque_const", m.torque_const},
        {"emf_const", m.emf_const},   {"gear_ratio", m.gear_ratio},
        {"damping", m.damping},       {"voltage_limit", m.voltage_limit}};
    for (const auto& [name, value] : fields) {
      if (!(value > 0.0)) throw ConfigError(r.Field(name), "must be > 0");
    }
  }
  {
    MapReader r(top.Take("pid").value_or(YAML::Node()), "pid");
    r.Read("kp", b.controllers.pid.kp);
    r.Read("ki", b.controllers.pid.ki);
    r.Read("kd", b.controllers.pid.kd);
    r.Finish();
  }
  {
    MapReader r(top.Take("feedforward").value_or(YAML::Node()), "feedforward");
    r.Read("kff", b.controllers.feedforward.kff);
    r.Finish();
  }
  {
    MapReader r(top.Take("pursuit").value_or(YAML::Node()), "pursuit");
    r.Read("lookahead_gain", b.controllers.lookahead_gain);
    r.Read("lookahead_min", b.controllers.lookahead_min);
    r.Read("lookahead_max", b.controllers.lookahead_max);
    r.Finish();
  }
  {
    MapReader r(top.Take("tune").value_or(YAML::Node()), "tune");
    if (auto n = r.Take("controller_type")) {
      try {
        b.tune_type =
            control::ParseControllerType(AsString(*n, "tune.controller_type"));
      } catch (const std::invalid_argument& e) {
        throw ConfigError("tune.controller_type", e.what());
      }
    }
    r.Finish();
  }
  top.Finish();

  Validated([&] { b.config.Validate(); });
  Validated([&] { b.vehicle.Validate(); });
  Validated([&] { b.controllers.Validate(); });
  Validated([&] { b.scenario.Validate(b.vehicle); });
  return b;
}

}  // namespace

ScenarioBundle ParseScenario(std::string_view yaml_text,
                             const std::vector<std::string>& overrides) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError("<syntax>", e.what());
  }
  if (!root || root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  if (!root.IsMap()) throw ConfigError("<root>", "expected a mapping");
  for (const std::string& assignment : overrides)
    ApplyOverride(root, assignment);
  return FromYaml(root);
}

ScenarioBundle LoadScenario(const std::filesystem::path& file,
                            const std::vector<std::string>& overrides) {
  std::ifstream in(file);
  if (!in) {
    throw ConfigError("<file>",
                      "cannot read scenario file '" + file.string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseScenario(text.str(), overrides);
}

}  // namespace rover::cli
