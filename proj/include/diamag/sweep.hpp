// sweep.hpp - run configuration and the sweep dispatcher behind the CLI
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamag/emit.hpp"
#include "diamag/materials.hpp"

namespace diamag {

enum class Command { Diffusion, Decoherence, Pair, Drag, Simulate, Materials, Ledger };
enum class MethodChoice { Closed, Quadrature, Both };

struct SimulateParams {
  long n_particles = 10000;
  double t_end_over_xi = 20.0;  // t_end = t_end_over_xi / xi
  double dt_xi = 0.01;          // dt = dt_xi / xi
  int n_bins = 200;
  int fp_cells = 0;  // > 0 adds a Fokker-Planck relaxation column
};

struct RunConfig {
  Command command = Command::Diffusion;
  std::string material = "nanodiamond";
  bool material_named = false;  // true once a name is given explicitly
  // Inline material fields. Alone they define a material from scratch;
  // together with an explicit name they override that preset's fields
  // (needed e.g. to supply epsilon_r for the superconductor preset).
  std::optional<double> chi_r, chi_i, epsilon_r;
  double radius_a = 1e-7;  // m
  double mass_m = 1e-17;   // kg
  double beta = 0.5;
  std::vector<double> temperatures{300.0};
  std::vector<double> delta_x{1e-8};       // m, decoherence sweep
  std::vector<double> separation_d{1e-8};  // m, pair sweep
  MethodChoice method = MethodChoice::Both;
  bool diagnostics = false;
  std::uint64_t seed = 42;
  std::string materials_file;  // optional preset file
  SimulateParams sim;
};

/// Overlay JSON config text onto `base` (file values, later overridden by
/// CLI flags). Unknown keys are rejected.
RunConfig apply_config_json(const std::string& text, RunConfig base);
RunConfig load_config_file(const std::string& path, RunConfig base);

Command parse_command(const std::string& name);
MethodChoice parse_method(const std::string& name);
const char* method_name(MethodChoice m);
const char* command_name(Command c);

/// Resolve the effective material (inline fields win over the named preset).
Material resolve_material(const RunConfig& config);

/// Compute the sweep. Row count is the Cartesian product of the swept lists.
/// Rows that fail (e.g. quadrature non-convergence) carry an error flag and
/// are counted in error_rows; configuration errors throw instead.
SweepResult run(const RunConfig& config);

/// Canonical one-line echo of the effective configuration for metadata.
std::string config_echo(const RunConfig& config);

}  // namespace diamag
