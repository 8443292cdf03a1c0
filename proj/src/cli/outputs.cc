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

#include "rover/cli/outputs.h"

#include <fmt/format.h>

#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace rover::cli {
namespace {

constexpr std::size_t kColumns = 12;

std::array<double, kColumns> Columns(const sim::TraceRow& r) {
  return {r.t,     r.x,   r.y,   r.theta, r.v,    r.v_ref,
          r.delta, r.cte, r.e_v, r.u_pid, r.u_ff, r.theta_road};
}

sim::TraceRow FromColumns(const std::array<double, kColumns>& c) {
  return {.t = c[0],
          .x = c[1],
          .y = c[2],
          .theta = c[3],
          .v = c[4],
          .v_ref = c[5],
          .delta = c[6],
          .cte = c[7],
          .e_v = c[8],
          .u_pid = c[9],
          .u_ff = c[10],
          .theta_road = c[11]};
}

void WriteFile(const std::filesystem::path& file,
               const std::function<void(std::ostream&)>& body) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out)
    throw OutputError("cannot open '" + file.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw OutputError("failed writing '" + file.string() + "'");
}

}  // namespace

std::string FormatNumber(double value) { return fmt::format("{:.9g}", value); }

void WriteTraceCsv(std::ostream& out, const sim::SimTrace& trace) {
  out << kTraceCsvHeader << '\n';
  std::string line;
  for (const sim::TraceRow& row : trace.rows) {
    line.clear();
    const auto columns = Columns(row);
    for (std::size_t i = 0; i < kColumns; ++i) {
      if (i > 0) line += ',';
      line += FormatNumber(columns[i]);
    }
    out << line << '\n';
  }
}

sim::SimTrace ReadTraceCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceCsvHeader) {
    throw OutputError("trace CSV: unexpected header");
  }
  sim::SimTrace trace;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::array<double, kColumns> columns{};
    std::istringstream fields(line);
    std::string field;
    std::size_t i = 0;
    while (std::getline(fields, field, ',')) {
      if (i >= kColumns) {
        throw OutputError(
            fmt::format("trace CSV line {}: too many columns", line_number));
      }
      try {
        std::size_t used = 0;
        columns[i] = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw OutputError(fmt::format("trace CSV line {}: bad number '{}'",
                                      line_number, field));
      }
      ++i;
    }
    if (i != kColumns) {
      throw OutputError(fmt::format("trace CSV line {}: expected {} columns",
                                    line_number, kColumns));
    }
    trace.rows.push_back(FromColumns(columns));
  }
  return trace;
}

void AppendMetrics(KeyValues& out, const std::string& prefix,
                   const sim::Metrics& m) {
  const std::string p = prefix.empty() ? "" : prefix + ".";
  out.emplace_back(p + "speed_rmse", FormatNumber(m.speed_rmse));
  out.emplace_back(p + "max_speed_error", FormatNumber(m.max_speed_error));
  out.emplace_back(p + "cte_rmse", FormatNumber(m.cte_rmse));
  out.emplace_back(p + "max_cte", FormatNumber(m.max_cte));
  out.emplace_back(p + "settled", m.settled ? "true" : "false");
}

void WriteKeyValues(std::ostream& out, const KeyValues& values) {
  for (const auto& [key, value] : values) out << key << '=' << value << '\n';
}

void WritePlotScript(std::ostream& out, const std::vector<NamedTrace>& traces) {
  if (traces.empty()) return;
  auto plot_all = [&](const char* columns) {
    out << "plot ";
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (i > 0) out << ", \\\n     ";
      out << '\'' << traces[i].file << "' using " << columns
          << " with lines title '" << traces[i].label << '\'';
    }
  };
  out << "# gnuplot script; run with: gnuplot -p plot.gp\n"
      << "set datafile separator ','\n"
      << "set grid\n"
      << "set multiplot layout 3,1\n"
      << "set xlabel 't [s]'\n"
      << "set ylabel 'v [m/s]'\n";
  plot_all("1:5");
  out << ", \\\n     '" << traces.front().file
      << "' using 1:6 with lines dashtype 2 title 'v_ref'\n"
      << "set ylabel 'cte [m]'\n";
  plot_all("1:8");
  out << "\nset xlabel 'x [m]'\n"
      << "set ylabel 'y [m]'\n"
      << "set size ratio -1\n";
  plot_all("2:3");
  out << "\nunset multiplot\n";
}

void EmitOutputs(const std::filesystem::path& dir,
                 const std::vector<NamedTrace>& traces,
                 const KeyValues& metrics) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw OutputError("cannot create output directory '" + dir.string() +
                      "': " + ec.message());
  }
  for (const NamedTrace& t : traces) {
    WriteFile(dir / t.file,
              [&](std::ostream& out) { WriteTraceCsv(out, *t.trace); });
  }
  WriteFile(dir / "metrics.txt",
            [&](std::ostream& out) { WriteKeyValues(out, metrics); });
  if (!traces.empty()) {
    WriteFile(dir / "plot.gp",
              [&](std::ostream& out) { WritePlotScript(out, traces); });
  }
}

}  // namespace rover::cli
