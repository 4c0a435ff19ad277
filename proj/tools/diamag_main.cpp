// diamag_main.cpp - command-line front end
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diamag/emit.hpp"
#include "diamag/ledger.hpp"
#include "diamag/sweep.hpp"
#include "diamag/version.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  std::string material;
  std::optional<double> chi_r, chi_i, epsilon_r;
  std::optional<double> radius_a, mass_m, beta;
  std::vector<double> temperatures;
  std::vector<double> delta_x;
  std::vector<double> separation_d;
  std::string method;
  std::string format = "csv";
  std::string out_path;
  bool diagnostics = false;
  std::optional<std::uint64_t> seed;
  std::string materials_file;
  std::optional<long> n_particles;
  std::optional<int> fp_cells;
};

int run_sweep(diamag::Command command, const CliOverrides& cli) {
  diamag::RunConfig config;
  config.command = command;
  if (!cli.config_path.empty()) {
    config = diamag::load_config_file(cli.config_path, std::move(config));
    config.command = command;  // the subcommand wins over a config `command`
  }
  // Flags override file values.
  if (!cli.material.empty()) {
    config.material = cli.material;
    config.material_named = true;
  }
  if (cli.chi_r) config.chi_r = cli.chi_r;
  if (cli.chi_i) config.chi_i = cli.chi_i;
  if (cli.epsilon_r) config.epsilon_r = cli.epsilon_r;
  if (cli.radius_a) config.radius_a = *cli.radius_a;
  if (cli.mass_m) config.mass_m = *cli.mass_m;
  if (cli.beta) config.beta = *cli.beta;
  if (!cli.temperatures.empty()) config.temperatures = cli.temperatures;
  if (!cli.delta_x.empty()) config.delta_x = cli.delta_x;
  if (!cli.separation_d.empty()) config.separation_d = cli.separation_d;
  if (!cli.method.empty()) config.method = diamag::parse_method(cli.method);
  if (cli.diagnostics) config.diagnostics = true;
  if (cli.seed) config.seed = *cli.seed;
  if (!cli.materials_file.empty()) config.materials_file = cli.materials_file;
  if (cli.n_particles) config.sim.n_particles = *cli.n_particles;
  if (cli.fp_cells) config.sim.fp_cells = *cli.fp_cells;

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cli.out_path.empty()) {
    file.open(cli.out_path, std::ios::binary);  // LF endings everywhere
    if (!file) {
      std::cerr << "error: cannot write to '" << cli.out_path << "'\n";
      return 1;
    }
    os = &file;
  }

  if (command == diamag::Command::Ledger) {
    *os << diamag::format_ledger();
    return 0;
  }

  const diamag::SweepResult result = diamag::run(config);
  if (cli.format == "csv") {
    diamag::emit_csv(result, *os);
  } else if (cli.format == "json") {
    diamag::emit_json(result, *os);
  } else {
    std::cerr << "error: unknown format '" << cli.format
              << "' (expected csv|json)\n";
    return 1;
  }
  os->flush();
  if (result.error_rows > 0) {
    std::cerr << "error: " << result.error_rows
              << " sweep row(s) failed; see the flags column\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diamag: momentum diffusion, decoherence and drag of magnetic "
      "nanospheres in thermal electromagnetic fields"};
  app.set_version_flag("--version", diamag::kVersion);
  app.require_subcommand(1);

  CliOverrides cli;
  app.add_option("--config", cli.config_path,
                 "JSON config file; flags override file values");
  app.add_option("--format", cli.format, "Output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cli.out_path, "Output path (default: stdout)");
  app.add_option("--method", cli.method, "closed|quadrature|both")
      ->check(CLI::IsMember({"closed", "quadrature", "both"}));
  app.add_flag("--diagnostics", cli.diagnostics,
               "Append long-wavelength regime indicators to every row");
  app.add_option("--seed", cli.seed, "RNG seed for stochastic commands");
  app.add_option("--material", cli.material, "Material preset name");
  app.add_option("--chi-r", cli.chi_r, "Inline material: Re(chi)");
  app.add_option("--chi-i", cli.chi_i, "Inline material: Im(chi) >= 0");
  app.add_option("--epsilon-r", cli.epsilon_r,
                 "Inline material: relative permittivity");
  app.add_option("--radius", cli.radius_a, "Particle radius [m]");
  app.add_option("--mass", cli.mass_m, "Particle mass [kg]");
  app.add_option("--beta", cli.beta, "Shape factor (1/2 for a sphere)");
  app.add_option("-T,--temperature", cli.temperatures,
                 "Bath temperature(s) [K]");
  app.add_option("--delta-x", cli.delta_x, "Superposition size(s) [m]");
  app.add_option("--separation", cli.separation_d, "Dipole separation(s) [m]");
  app.add_option("--materials-file", cli.materials_file,
                 "Extra material presets file");
  app.add_option("--particles", cli.n_particles,
                 "simulate: number of Langevin particles");
  app.add_option("--fp-cells", cli.fp_cells,
                 "simulate: Fokker-Planck grid cells (0 = skip)");

  std::map<std::string, diamag::Command> commands = {
      {"diffusion", diamag::Command::Diffusion},
      {"decoherence", diamag::Command::Decoherence},
      {"pair", diamag::Command::Pair},
      {"drag", diamag::Command::Drag},
      {"simulate", diamag::Command::Simulate},
      {"materials", diamag::Command::Materials},
      {"ledger", diamag::Command::Ledger},
  };
  static const std::map<std::string, std::string> descriptions = {
      {"diffusion", "Momentum-diffusion constants (magnetic/electric/coupled/"
                    "absorption/total)"},
      {"decoherence", "Long-wavelength decoherence rate over delta_x"},
      {"pair", "Two-dipole emission rates and decoherence factor over "
               "separation"},
      {"drag", "Einstein-Hopf drag coefficients"},
      {"simulate", "Langevin/Fokker-Planck realization of drag + diffusion"},
      {"materials", "List material presets"},
      {"ledger", "Print the discrepancy ledger"},
  };
  int rc = 0;
  for (const auto& [name, cmd] : commands) {
    const diamag::Command command_id = cmd;
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->fallthrough();  // global flags may follow the subcommand
    sub->callback([&cli, &rc, command_id] { rc = run_sweep(command_id, cli); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
