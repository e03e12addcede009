// hopctl: batch front end for the hop engine.
//
//   hopctl <command> [--config PATH] [--out PATH] [--format json|csv] [--workers N] [--seed N]
//
// Commands: epoly, dunkl-v, expw, limit, measure, verify, rankone.
// Flags override the matching config fields.

#include "hop/commands.hpp"
#include "hop/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Exact Heckman-Opdam / Dunkl engine"};
  app.require_subcommand(1);

  std::string config_path, out, format;
  int workers = -1;
  long long seed = -1;
  const std::map<std::string, std::string> blurb{
      {"epoly", "E_lambda with spectrum, normalizer and invariant checks"},
      {"dunkl-v", "intertwiner stages V_d on degree-d polynomials"},
      {"expw", "truncated kernels Exp_W and J_W on the z grid"},
      {"limit", "scaling, symmetric and moment convergence tables"},
      {"measure", "atoms and moments of mu_lambda^n"},
      {"verify", "sweeps over systems and multiplicities"},
      {"rankone", "A1 closed forms and the Bessel limit"},
  };
  for (const auto& name : hop::command_names()) {
    CLI::App* sub = app.add_subcommand(name, blurb.count(name) ? blurb.at(name) : "");
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--workers", workers, "OpenMP worker count")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "RNG seed")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : hop::kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  hop::RunConfig cfg;
  try {
    cfg = config_path.empty() ? hop::parse_config(nlohmann::json::object()) : hop::load_config(config_path);
  } catch (const hop::ConfigError& e) {
    std::cout << nlohmann::ordered_json{{"status", "config_error"}, {"invariant", "valid_config"}, {"detail", e.what()}}.dump(2)
              << '\n';
    return hop::kExitConfig;
  }
  if (!out.empty()) cfg.out = out;
  if (!format.empty()) cfg.format = format;
  if (workers >= 0) cfg.workers = workers;
  if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);

  return hop::run_command(command, cfg, std::cout);
}
