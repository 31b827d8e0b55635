#include "geoflow/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "geoflow/errors.hpp"

namespace geoflow::io {

json to_json(const PeriodicField& u) {
  return json{{"n_points", u.size()},
              {"values", std::vector<double>(u.values().begin(), u.values().end())}};
}

json to_json(const CircleDiffeo& phi) {
  json j = to_json(phi.displacement());
  j["type"] = "diffeo";
  return j;
}

json to_json(const Trajectory& traj) {
  json states = json::array();
  for (const auto& s : traj.states) {
    states.push_back(json{{"t", s.t}, {"phi", to_json(s.phi)}, {"u", to_json(s.u)}});
  }
  return json{{"k", traj.k.value()},
              {"times", traj.times()},
              {"energy", traj.energy},
              {"momentum_dev", traj.momentum_deviation},
              {"states", std::move(states)}};
}

PeriodicField field_from_json(const json& j, int max_mode) {
  if (!j.is_object() || !j.contains("n_points") || !j.contains("values")) {
    throw InvalidArgument("field JSON needs \"n_points\" and \"values\"");
  }
  const int n = j.at("n_points").get<int>();
  auto values = j.at("values").get<std::vector<double>>();
  if (static_cast<int>(values.size()) != n) {
    throw InvalidArgument("field JSON: \"values\" has " + std::to_string(values.size()) +
                          " entries, expected n_points = " + std::to_string(n));
  }
  return PeriodicField(GridSpec(n, max_mode), std::move(values));
}

CircleDiffeo diffeo_from_json(const json& j, int max_mode) {
  if (j.contains("type") && j.at("type") != "diffeo") {
    throw InvalidArgument("diffeo JSON: \"type\" must be \"diffeo\"");
  }
  return CircleDiffeo(field_from_json(j, max_mode));
}

PeriodicField read_field(const std::string& path, int max_mode) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open field file '" + path + "'");
  return field_from_json(json::parse(in), max_mode);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> columns)
    : out_(out), width_(columns.size()) {
  row(columns);
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v));
  row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw InvalidArgument("CsvWriter: row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  CsvWriter csv(out, {"t", "energy", "momentum_dev"});
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    csv.row({traj.states[i].t, traj.energy[i], traj.momentum_deviation[i]});
  }
}

void write_log_trace_csv(std::ostream& out, const LogTrace& trace) {
  CsvWriter csv(out, {"iter", "residual"});
  for (std::size_t i = 0; i < trace.residuals.size(); ++i) {
    csv.row({std::to_string(i), format_number(trace.residuals[i])});
  }
}

void write_minimization_csv(std::ostream& out, const MinimizationReport& report) {
  CsvWriter csv(out, {"sample_id", "length", "r", "excess", "in_chart"});
  for (const auto& s : report.samples) {
    csv.row({std::to_string(s.id), format_number(s.length), format_number(s.r),
             format_number(s.excess), s.in_chart ? "1" : "0"});
  }
}

void write_probe_csv(std::ostream& out, const std::vector<ProbeRow>& rows) {
  CsvWriter csv(out, {"direction_id", "h", "fd_norm", "ratio"});
  for (const auto& r : rows) {
    csv.row({std::to_string(r.direction_id), format_number(r.h), format_number(r.fd_norm),
             format_number(r.ratio)});
  }
}

}  // namespace geoflow::io
