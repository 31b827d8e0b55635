#include "geoflow_cli/runner.hpp"

#include <chrono>
#include <map>
#include <ostream>

#include "geoflow/io.hpp"

namespace geoflow::cli {

namespace {

using CommandFn = json (*)(const json&, CommandContext&);

struct CommandInfo {
  CommandFn fn;
  const char* summary;
};

const std::map<std::string, CommandInfo>& registry() {
  static const std::map<std::string, CommandInfo> table{
      {"geodesic", {run_geodesic, "integrate a geodesic from the identity"}},
      {"exp", {run_exp, "Riemannian exponential (time-one map)"}},
      {"log", {run_log, "Riemannian logarithm by Newton shooting"}},
      {"transport", {run_transport, "parallel transport along a geodesic"}},
      {"minimize", {run_minimize, "compare perturbed path lengths with the geodesic"}},
      {"burgers", {run_burgers, "L2 (k = 0) case via characteristics"}},
      {"selftest", {run_selftest, "module invariant table"}},
  };
  return table;
}

json versions() {
  json v{{"geoflow", version()}};
  for (const auto& [name, ver] : dependency_versions()) v[name] = ver;
  return v;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"geodesic", "exp",     "log",     "transport",
                                              "minimize", "burgers", "selftest"};
  return names;
}

std::string command_summary(const std::string& command) {
  const auto it = registry().find(command);
  return it == registry().end() ? "" : it->second.summary;
}

std::string output_reference() {
  return R"(Outputs (CSV numbers use 17 significant digits):
  geodesic   trajectory.json, trajectory.csv   t,energy,momentum_dev
  exp        exp.json
  log        log.json, log_trace.csv           iter,residual
  transport  transport.json, transport.csv     t,i,j,inner,drift
             derivation.csv                    t,lift_id,residual
  minimize   minimization.csv                  sample_id,length,r,excess,in_chart
  burgers    characteristics.json, burgers.csv x,foot_point,u_characteristics,u_spectral
             probe_k0.csv, probe_control.csv   direction_id,h,fd_norm,ratio
  selftest   selftest.csv                      module,check,value,tolerance,pass
Every run writes manifest.json with the config echo, versions, wall time and
status. Exit codes: 0 success, 2 invalid input, 3 numerical failure, 1 internal.
GEOFLOW_THREADS caps worker threads.)";
}

RunOutcome run(const RunRequest& request, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  json manifest{{"command", request.command}, {"versions", versions()}};
  if (request.config) manifest["config_path"] = request.config->string();
  int code = kExitOk;
  bool out_ok = false;
  CommandContext ctx{request.out_dir, {}, {}, log};

  auto record_error = [&](int exit_code, const std::string& kind, const std::string& what) {
    code = exit_code;
    manifest["status"] = "error";
    manifest["error"] = json{{"kind", kind}, {"message", what}};
    log << "geoflow " << request.command << ": " << kind << ": " << what << '\n';
  };

  try {
    std::error_code ec;
    std::filesystem::create_directories(request.out_dir, ec);
    if (ec || !std::filesystem::is_directory(request.out_dir)) {
      throw InvalidArgument("cannot create output directory '" + request.out_dir.string() + "'");
    }
    out_ok = true;

    const auto it = registry().find(request.command);
    if (it == registry().end()) throw InvalidArgument("unknown command '" + request.command + "'");

    json config = json::object();
    if (request.config) {
      config = load_config(*request.config);
      ctx.inputs.base_dir = request.config->parent_path();
    } else if (request.command != "selftest") {
      throw ConfigError("--config is required for '" + request.command + "'");
    }
    manifest["config"] = config;

    std::uint64_t seed = 0;
    if (config.is_object() && config.contains("seed")) {
      if (!config["seed"].is_number_unsigned()) {
        throw ConfigError("config field 'seed': expected a non-negative integer seed");
      }
      seed = config["seed"].get<std::uint64_t>();
    }
    if (request.seed) seed = *request.seed;
    ctx.inputs.seed = seed;
    manifest["seed"] = seed;

    manifest["results"] = it->second.fn(config, ctx);
    manifest["status"] = "ok";
  } catch (const BlowUp& e) {
    record_error(kExitNumerical, e.kind(), e.what());
    manifest["error"]["t"] = e.time();
  } catch (const Error& e) {
    record_error(e.numerical() ? kExitNumerical : kExitValidation, e.kind(), e.what());
  } catch (const json::exception& e) {
    // Type errors while reading a config that passed the schema checks.
    record_error(kExitValidation, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    record_error(kExitInternal, "internal", e.what());
  }

  manifest["exit_code"] = code;
  manifest["outputs"] = ctx.outputs;
  manifest["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out_ok) {
    try {
      io::write_json((request.out_dir / "manifest.json").string(), manifest);
    } catch (const std::exception& e) {
      log << "geoflow: cannot write manifest: " << e.what() << '\n';
      if (code == kExitOk) code = kExitValidation;
    }
  }
  return RunOutcome{code, std::move(manifest)};
}

}  // namespace geoflow::cli
