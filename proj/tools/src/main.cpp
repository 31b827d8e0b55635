#include <iostream>

#include "CLI11.hpp"
#include "geoflow_cli/runner.hpp"

int main(int argc, char** argv) {
  namespace cli = geoflow::cli;
  CLI::App app{"geoflow: geodesics of right-invariant Sobolev metrics on Diff(S^1)"};
  app.set_version_flag("--version", geoflow::version());
  app.footer(cli::output_reference());
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::int64_t seed = -1;
  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, cli::command_summary(name));
    auto* c = sub->add_option("--config", config, "JSON config file");
    if (name != "selftest") c->required();
    sub->add_option("--out", out, "output directory (created if missing)")->required();
    sub->add_option("--seed", seed, "seed for random initial conditions and perturbations")
        ->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitValidation;
  }

  cli::RunRequest req;
  req.command = app.get_subcommands().front()->get_name();
  if (!config.empty()) req.config = config;
  req.out_dir = out;
  if (seed >= 0) req.seed = static_cast<std::uint64_t>(seed);
  const auto outcome = cli::run(req, std::cerr);
  if (outcome.exit_code == cli::kExitOk) {
    std::cout << outcome.manifest["results"].dump(2) << '\n';
  }
  return outcome.exit_code;
}
