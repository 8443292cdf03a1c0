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

#ifndef ROVER_CLI_OUTPUTS_H_
#define ROVER_CLI_OUTPUTS_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rover/sim/simulator.h"

namespace rover::cli {

inline constexpr std::string_view kTraceCsvHeader =
    "t,x,y,theta,v,v_ref,delta,cte,e_v,u_pid,u_ff,theta_road";

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nine significant digits, shortest form ("%.9g").
std::string FormatNumber(double value);

void WriteTraceCsv(std::ostream& out, const sim::SimTrace& trace);

/// Inverse of WriteTraceCsv. Throws OutputError on a bad header or row.
sim::SimTrace ReadTraceCsv(std::istream& in);

/// Ordered key=value lines.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

void AppendMetrics(KeyValues& out, const std::string& prefix,
                   const sim::Metrics& metrics);
void WriteKeyValues(std::ostream& out, const KeyValues& values);

/// Named trace to be written as `<file>` and plotted under `label`.
struct NamedTrace {
  std::string file;
  std::string label;
  const sim::SimTrace* trace = nullptr;
};

/// gnuplot script plotting speed, cross-track error and the x-y track of
/// every listed CSV file.
void WritePlotScript(std::ostream& out, const std::vector<NamedTrace>& traces);

/// Writes every trace CSV, metrics.txt and plot.gp into `dir`, creating it
/// if needed. Throws OutputError on I/O failure.
void EmitOutputs(const std::filesystem::path& dir,
                 const std::vector<NamedTrace>& traces,
                 const KeyValues& metrics);

}  // namespace rover::cli

#endif  // ROVER_CLI_OUTPUTS_H_
