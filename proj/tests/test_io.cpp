#include <algorithm>
#include <sstream>
#include <string>

#include "doctest.h"
#include "geoflow/io.hpp"
#include "support.hpp"

using namespace geoflow;
using namespace geoflow::testing;
using geoflow::io::json;

TEST_CASE("numbers print with 17 significant digits") {
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(-2.5e-300) == "-2.5e-300");
  CHECK(io::format_number(2.0 / 3.0) == "0.66666666666666663");
  CHECK(io::format_number(std::nan("")) == "nan");
  CHECK(io::format_number(-1.0 / 0.0) == "-inf");
  for (double v : {kPi, 1.0 / 3.0, 6.02214076e23, -1e-17}) {
    CHECK(std::stod(io::format_number(v)) == v);
  }
}

TEST_CASE("field and diffeo JSON round trip exactly") {
  const GridSpec g(32);
  const auto u = random_band_limited(g, 12, 6, 0.7);
  const json j = io::to_json(u);
  CHECK(j.at("n_points") == 32);
  CHECK(j.at("values").size() == 32);
  const auto back = io::field_from_json(json::parse(j.dump()));
  CHECK(sup_diff(back, u) == 0.0);

  const auto phi = random_diffeo(g, 3);
  const json d = io::to_json(phi);
  CHECK(d.at("type") == "diffeo");
  CHECK(sup_diff(io::diffeo_from_json(json::parse(d.dump())), phi) == 0.0);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(io::field_from_json(json{{"n_points", 8}}), InvalidArgument);
  CHECK_THROWS_AS(io::field_from_json(json{{"n_points", 8}, {"values", {1.0, 2.0}}}),
                  InvalidArgument);
  CHECK_THROWS_AS(io::field_from_json(json::array()), InvalidArgument);
  json bad = io::to_json(PeriodicField::zero(GridSpec(8)));
  bad["type"] = "field";
  CHECK_THROWS_AS(io::diffeo_from_json(bad), InvalidArgument);
  CHECK_THROWS_AS(io::read_field("/nonexistent/field.json"), InvalidArgument);
}

TEST_CASE("trajectory JSON and CSV") {
  SolverConfig c{GridSpec(16), SobolevOrder(1)};
  c.dt = 0.1;
  c.t_end = 0.3;
  const auto traj = integrate_geodesic(sin_mode(c.grid, 1, 0.05), c);
  const json j = io::to_json(traj);
  CHECK(j.at("k") == 1);
  CHECK(j.at("times").size() == 4);
  CHECK(j.at("energy").size() == 4);
  CHECK(j.at("momentum_dev").size() == 4);
  REQUIRE(j.at("states").size() == 4);
  const auto& s = j.at("states").at(3);
  CHECK(s.at("t").get<double>() == doctest::Approx(0.3));
  CHECK(s.at("phi").at("type") == "diffeo");
  CHECK(s.at("u").at("values").size() == 16);

  std::ostringstream out;
  io::write_trajectory_csv(out, traj);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,energy,momentum_dev");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 2);
  }
  CHECK(rows == 4);
}

TEST_CASE("report CSV headers") {
  std::ostringstream a;
  io::write_log_trace_csv(a, LogTrace{{0.5, 1e-3}, 1});
  CHECK(a.str() == "iter,residual\n0,0.5\n1,0.001\n");

  std::ostringstream b;
  io::write_minimization_csv(b, MinimizationReport{0.25, 0.25, {{0, 0.25, 0.25, 0.0, true, ""},
                                                               {1, 0.5, 0.25, 0.25, false, "x"}},
                                                   true});
  CHECK(b.str() == "sample_id,length,r,excess,in_chart\n0,0.25,0.25,0,1\n1,0.5,0.25,0.25,0\n");

  std::ostringstream c;
  const double nan = std::nan("");
  io::write_probe_csv(c, {{0, 0.001, 2.0, nan, true}, {0, 0.0001, nan, nan, false}});
  CHECK(c.str() == "direction_id,h,fd_norm,ratio\n0,0.001,2,nan\n0,0.0001,nan,nan\n");
}

TEST_CASE("csv writer checks row width") {
  std::ostringstream out;
  io::CsvWriter csv(out, {"a", "b"});
  CHECK_THROWS_AS(csv.row(std::vector<double>{1.0}), InvalidArgument);
  csv.row(std::vector<double>{1.0, 2.0});
  CHECK(out.str() == "a,b\n1,2\n");
}
