#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geoflow/burgers.hpp"
#include "geoflow/geodesic.hpp"
#include "geoflow/transport.hpp"

namespace geoflow::io {

using nlohmann::json;

// {"n_points": N, "values": [...]} in grid order x_j = j/N.
json to_json(const PeriodicField& u);
// {"type": "diffeo", "n_points": N, "values": [displacement...]}.
json to_json(const CircleDiffeo& phi);
// {"k", "times", "energy", "momentum_dev", "states": [{"t", "phi", "u"}]}.
json to_json(const Trajectory& traj);

// The grid's max_mode defaults to n_points / 3 unless given.
PeriodicField field_from_json(const json& j, int max_mode = 0);
CircleDiffeo diffeo_from_json(const json& j, int max_mode = 0);

PeriodicField read_field(const std::string& path, int max_mode = 0);
void write_json(const std::string& path, const json& j);

// Decimal with 17 significant digits; the same double always prints the same way.
std::string format_number(double v);

// Minimal CSV writer: header on construction, one row per call.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> columns);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
  std::size_t width_;
};

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_log_trace_csv(std::ostream& out, const LogTrace& trace);
void write_minimization_csv(std::ostream& out, const MinimizationReport& report);
void write_probe_csv(std::ostream& out, const std::vector<ProbeRow>& rows);

}  // namespace geoflow::io
