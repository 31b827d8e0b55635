#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geoflow_cli/config.hpp"
#include "geoflow_cli/inputs.hpp"

namespace geoflow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
};

struct RunRequest {
  std::string command;
  std::optional<std::filesystem::path> config;  // optional only for selftest
  std::filesystem::path out_dir;
  std::optional<std::uint64_t> seed;  // overrides the config's "seed"
};

struct RunOutcome {
  int exit_code;
  json manifest;
};

// Runs one command, writing its artifacts and manifest.json into out_dir.
RunOutcome run(const RunRequest& request, std::ostream& log);

const std::vector<std::string>& command_names();
std::string command_summary(const std::string& command);
// Column reference for every CSV the tool writes.
std::string output_reference();

// Per-command state handed to the implementations.
struct CommandContext {
  std::filesystem::path out_dir;
  InputContext inputs;
  std::vector<std::string> outputs;
  std::ostream& log;

  std::filesystem::path output(const std::string& name);
  void write_json(const std::string& name, const json& j);
};

json run_geodesic(const json& config, CommandContext& ctx);
json run_exp(const json& config, CommandContext& ctx);
json run_log(const json& config, CommandContext& ctx);
json run_transport(const json& config, CommandContext& ctx);
json run_minimize(const json& config, CommandContext& ctx);
json run_burgers(const json& config, CommandContext& ctx);
json run_selftest(const json& config, CommandContext& ctx);

// Thrown by selftest when a check fails; reported as a numerical failure.
class SelfTestFailure : public NumericalError {
 public:
  explicit SelfTestFailure(const std::string& what) : NumericalError("selftest_failed", what) {}
};

}  // namespace geoflow::cli
