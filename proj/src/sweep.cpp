// sweep.cpp - config handling and sweep evaluation
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "diamag/sweep.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "diamag/constants.hpp"
#include "diamag/diffusion.hpp"
#include "diamag/drag.hpp"
#include "diamag/ledger.hpp"
#include "diamag/special_math.hpp"
#include "diamag/stochastic.hpp"
#include "diamag/two_dipole.hpp"
#include "diamag/version.hpp"

namespace diamag {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using nlohmann::json;

std::vector<double> to_list(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_number()) {
    out.push_back(j.get<double>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number()) {
        throw std::runtime_error("config: '" + key + "' must hold numbers");
      }
      out.push_back(v.get<double>());
    }
  } else {
    throw std::runtime_error("config: '" + key +
                             "' must be a number or an array of numbers");
  }
  if (out.empty()) {
    throw std::runtime_error("config: '" + key + "' must be non-empty");
  }
  return out;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "diffusion") return Command::Diffusion;
  if (name == "decoherence") return Command::Decoherence;
  if (name == "pair") return Command::Pair;
  if (name == "drag") return Command::Drag;
  if (name == "simulate") return Command::Simulate;
  if (name == "materials") return Command::Materials;
  if (name == "ledger") return Command::Ledger;
  throw std::runtime_error(
      "unknown command '" + name +
      "'; expected diffusion|decoherence|pair|drag|simulate|materials|ledger");
}

MethodChoice parse_method(const std::string& name) {
  if (name == "closed") return MethodChoice::Closed;
  if (name == "quadrature") return MethodChoice::Quadrature;
  if (name == "both") return MethodChoice::Both;
  throw std::runtime_error("unknown method '" + name +
                           "'; expected closed|quadrature|both");
}

const char* method_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::Closed: return "closed";
    case MethodChoice::Quadrature: return "quadrature";
    case MethodChoice::Both: return "both";
  }
  return "?";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Diffusion: return "diffusion";
    case Command::Decoherence: return "decoherence";
    case Command::Pair: return "pair";
    case Command::Drag: return "drag";
    case Command::Simulate: return "simulate";
    case Command::Materials: return "materials";
    case Command::Ledger: return "ledger";
  }
  return "?";
}

RunConfig apply_config_json(const std::string& text, RunConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config: JSON parse error: ") +
                             e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config: root must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      base.command = parse_command(value.get<std::string>());
    } else if (key == "material") {
      if (value.is_string()) {
        base.material = value.get<std::string>();
        base.material_named = true;
      } else if (value.is_object()) {
        for (const auto& [mk, mv] : value.items()) {
          if (mk == "name") {
            base.material = mv.get<std::string>();
            base.material_named = true;
          }
          else if (mk == "chi_r") base.chi_r = mv.get<double>();
          else if (mk == "chi_i") base.chi_i = mv.get<double>();
          else if (mk == "epsilon_r") base.epsilon_r = mv.get<double>();
          else throw std::runtime_error("config: unknown material key '" + mk + "'");
        }
      } else {
        throw std::runtime_error("config: 'material' must be a name or object");
      }
    } else if (key == "particle") {
      for (const auto& [pk, pv] : value.items()) {
        if (pk == "radius_a") base.radius_a = pv.get<double>();
        else if (pk == "mass_m") base.mass_m = pv.get<double>();
        else if (pk == "beta") base.beta = pv.get<double>();
        else throw std::runtime_error("config: unknown particle key '" + pk + "'");
      }
    } else if (key == "temperatures") {
      base.temperatures = to_list(value, key);
    } else if (key == "delta_x") {
      base.delta_x = to_list(value, key);
    } else if (key == "separation_d") {
      base.separation_d = to_list(value, key);
    } else if (key == "method") {
      base.method = parse_method(value.get<std::string>());
    } else if (key == "diagnostics") {
      base.diagnostics = value.get<bool>();
    } else if (key == "seed") {
      base.seed = value.get<std::uint64_t>();
    } else if (key == "materials_file") {
      base.materials_file = value.get<std::string>();
    } else if (key == "simulate") {
      for (const auto& [sk, sv] : value.items()) {
        if (sk == "n_particles") base.sim.n_particles = sv.get<long>();
        else if (sk == "t_end_over_xi") base.sim.t_end_over_xi = sv.get<double>();
        else if (sk == "dt_xi") base.sim.dt_xi = sv.get<double>();
        else if (sk == "n_bins") base.sim.n_bins = sv.get<int>();
        else if (sk == "fp_cells") base.sim.fp_cells = sv.get<int>();
        else throw std::runtime_error("config: unknown simulate key '" + sk + "'");
      }
    } else {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return apply_config_json(buf.str(), std::move(base));
}

Material resolve_material(const RunConfig& config) {
  const bool has_inline = config.chi_r || config.chi_i || config.epsilon_r;
  if (has_inline && !config.material_named) {
    Material m;
    m.name = "inline";
    m.chi_r = config.chi_r.value_or(0.0);
    m.chi_i = config.chi_i.value_or(0.0);
    m.epsilon_r = config.epsilon_r;
    validate(m);
    return m;
  }
  std::vector<Material> extra;
  if (!config.materials_file.empty()) {
    extra = load_materials_file(config.materials_file);
  }
  Material m = find_material(config.material, extra);
  // explicit name + inline fields: the fields override the preset's
  if (config.chi_r) m.chi_r = *config.chi_r;
  if (config.chi_i) m.chi_i = *config.chi_i;
  if (config.epsilon_r) m.epsilon_r = config.epsilon_r;
  validate(m);
  return m;
}

std::string config_echo(const RunConfig& config) {
  std::ostringstream os;
  os << "command=" << command_name(config.command);
  os << " material=" << config.material;
  if (config.chi_r) os << " chi_r=" << format_number(*config.chi_r);
  if (config.chi_i) os << " chi_i=" << format_number(*config.chi_i);
  if (config.epsilon_r) os << " epsilon_r=" << format_number(*config.epsilon_r);
  os << " radius_a=" << format_number(config.radius_a);
  os << " mass_m=" << format_number(config.mass_m);
  os << " beta=" << format_number(config.beta);
  auto list = [&](const char* name, const std::vector<double>& v) {
    os << " " << name << "=[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ";";
      os << format_number(v[i]);
    }
    os << "]";
  };
  list("temperatures", config.temperatures);
  if (config.command == Command::Decoherence) list("delta_x", config.delta_x);
  if (config.command == Command::Pair) list("separation_d", config.separation_d);
  os << " method=" << method_name(config.method);
  os << " diagnostics=" << (config.diagnostics ? "true" : "false");
  if (config.command == Command::Simulate) {
    os << " seed=" << config.seed;
    os << " n_particles=" << config.sim.n_particles;
    os << " t_end_over_xi=" << format_number(config.sim.t_end_over_xi);
    os << " dt_xi=" << format_number(config.sim.dt_xi);
    os << " n_bins=" << config.sim.n_bins;
    os << " fp_cells=" << config.sim.fp_cells;
  }
  return os.str();
}

namespace {

void validate_config(const RunConfig& config) {
  if (config.temperatures.empty()) {
    throw std::runtime_error("config: temperature list must be non-empty");
  }
  for (double t : config.temperatures) {
    if (!(t > 0.0)) {
      throw std::runtime_error("config: field 'temperatures' must be > 0");
    }
  }
  if (!(config.radius_a > 0.0)) {
    throw std::runtime_error("config: field 'particle.radius_a' must be > 0");
  }
  if (!(config.mass_m > 0.0)) {
    throw std::runtime_error("config: field 'particle.mass_m' must be > 0");
  }
  if (!(config.beta > 0.0)) {
    throw std::runtime_error("config: field 'particle.beta' must be > 0");
  }
  if (config.command == Command::Decoherence) {
    if (config.delta_x.empty()) {
      throw std::runtime_error("config: delta_x list must be non-empty");
    }
    for (double v : config.delta_x) {
      if (v < 0.0) throw std::runtime_error("config: field 'delta_x' must be >= 0");
    }
  }
  if (config.command == Command::Pair) {
    if (config.separation_d.empty()) {
      throw std::runtime_error("config: separation_d list must be non-empty");
    }
    for (double v : config.separation_d) {
      if (v < 0.0) {
        throw std::runtime_error("config: field 'separation_d' must be >= 0");
      }
    }
  }
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

struct RowBuilder {
  SweepRow row;
  MethodChoice method;
  bool flag_mismatch = false;

  void input(const std::string& name, Cell cell) {
    row.inputs.emplace_back(name, std::move(cell));
  }
  void output(const std::string& name, Cell cell) {
    row.outputs.emplace_back(name, std::move(cell));
  }
  // One physical quantity evaluated by both routes; emits per-method columns
  // and, when both are requested, their relative difference. `compare`
  // controls whether a large difference raises the mismatch flag (off for
  // quantities where the closed form is a long-wavelength approximation).
  void quantity(const std::string& name, double closed, double quadrature,
                bool compare = true) {
    switch (method) {
      case MethodChoice::Closed:
        output(name, Cell::number(closed));
        break;
      case MethodChoice::Quadrature:
        output(name, Cell::number(quadrature));
        break;
      case MethodChoice::Both: {
        output(name + "_closed", Cell::number(closed));
        output(name + "_quadrature", Cell::number(quadrature));
        const double rd = rel_diff(closed, quadrature);
        output(name + "_reldiff", Cell::number(rd));
        if (compare && rd > 1e-8) flag_mismatch = true;
        break;
      }
    }
  }
  void diagnostic(const std::string& name, double v) {
    row.diagnostics.emplace_back(name, Cell::number(v));
  }
};

void common_inputs(RowBuilder& b, const Material& mat, const RunConfig& cfg,
                   double temperature) {
  b.input("material", Cell::str(mat.name));
  b.input("chi_r", Cell::number(mat.chi_r));
  b.input("chi_i", Cell::number(mat.chi_i));
  b.input("epsilon_r", mat.epsilon_r ? Cell::number(*mat.epsilon_r)
                                     : Cell::empty());
  b.input("radius_a_m", Cell::number(cfg.radius_a));
  b.input("mass_m_kg", Cell::number(cfg.mass_m));
  b.input("beta", Cell::number(cfg.beta));
  b.input("temperature_K", Cell::number(temperature));
  b.input("method", Cell::str(method_name(cfg.method)));
}

SweepRow diffusion_row(const Material& mat, const RunConfig& cfg,
                       double temperature) {
  RowBuilder b;
  b.method = cfg.method;
  common_inputs(b, mat, cfg, temperature);
  const Particle particle{cfg.radius_a, cfg.mass_m, cfg.beta};
  const ThermalBath bath{temperature};
  const bool closed = cfg.method != MethodChoice::Quadrature;
  const bool quad = cfg.method != MethodChoice::Closed;
  const DiffusionBreakdown c =
      closed ? diffusion_components(mat, particle, bath, Method::ClosedForm)
             : DiffusionBreakdown{};
  const DiffusionBreakdown q =
      quad ? diffusion_components(mat, particle, bath, Method::Quadrature)
           : DiffusionBreakdown{};
  b.quantity("dp2_magnetic", c.dp2_magnetic, q.dp2_magnetic);
  b.quantity("dp2_electric", c.dp2_electric, q.dp2_electric);
  b.quantity("dp2_coupled", c.dp2_coupled, q.dp2_coupled);
  b.quantity("dp2_absorption", c.dp2_absorption, q.dp2_absorption);
  b.quantity("dp2_total", c.dp2_total, q.dp2_total);
  if (mat.epsilon_r && *mat.epsilon_r != 1.0) {
    b.output("ratio_to_dielectric",
             Cell::number(diffusion_ratio_to_dielectric(mat, *mat.epsilon_r)));
  } else {
    b.output("ratio_to_dielectric", Cell::empty());
  }
  if (b.flag_mismatch) b.row.flags = "closed_quadrature_mismatch";
  return b.row;
}

SweepRow decoherence_row(const Material& mat, const RunConfig& cfg,
                         double temperature, double delta_x) {
  RowBuilder b;
  b.method = cfg.method;
  common_inputs(b, mat, cfg, temperature);
  b.input("delta_x_m", Cell::number(delta_x));
  const Particle particle{cfg.radius_a, cfg.mass_m, cfg.beta};
  const ThermalBath bath{temperature};
  const bool closed = cfg.method != MethodChoice::Quadrature;
  const bool quad = cfg.method != MethodChoice::Closed;
  const DecoherenceResult c =
      closed ? decoherence_rate(mat, particle, bath, delta_x, Method::ClosedForm)
             : DecoherenceResult{};
  const DecoherenceResult q =
      quad ? decoherence_rate(mat, particle, bath, delta_x, Method::Quadrature)
           : DecoherenceResult{};
  b.quantity("lambda_scattering", c.lambda_scattering, q.lambda_scattering);
  b.quantity("gamma", c.gamma, q.gamma);
  if (cfg.diagnostics) {
    b.diagnostic("lw_parameter_delta_x",
                 delta_x * thermal_wavenumber(temperature));
  }
  if (b.flag_mismatch) b.row.flags = "closed_quadrature_mismatch";
  return b.row;
}

SweepRow pair_row(const Material& mat, const RunConfig& cfg,
                  double temperature, double separation) {
  RowBuilder b;
  b.method = cfg.method;
  common_inputs(b, mat, cfg, temperature);
  b.input("separation_m", Cell::number(separation));
  const Particle particle{cfg.radius_a, cfg.mass_m, cfg.beta};
  const ThermalBath bath{temperature};
  const DipolePairConfig pair_cfg{mat, particle, bath, separation};
  const bool closed = cfg.method != MethodChoice::Quadrature;
  const bool quad = cfg.method != MethodChoice::Closed;
  // Closed route: exact same-site rate, long-wavelength F. General route:
  // Bessel-kernel radial quadrature. Their difference is the long-wavelength
  // error, so it is reported but never flagged.
  double r_same_closed = 0.0, f_lw = 0.0;
  if (closed) {
    const double a3 = std::pow(particle.radius_a, 3);
    const double alpha_sq =
        a3 * a3 / (kMu0 * kMu0) * cm_scattering_factor(mat);
    const double alpha_i_abs = a3 / kMu0 * cm_absorption_factor(mat);
    const double c_light = kSpeedOfLight;
    const double sca = kMu0 / (6.0 * kPi) * alpha_sq *
                       bose_integral(6, BoseWeight::OccupationOnly,
                                     temperature) /
                       std::pow(c_light, 7);
    const double abs_t = alpha_i_abs / particle.beta *
                         bose_integral(3, BoseWeight::OccupationOnly,
                                       temperature) /
                         std::pow(c_light, 4);
    r_same_closed =
        kMu0 * c_light / (kPi * kPi) * (sca + abs_t);
    f_lw = decoherence_factor_lw(pair_cfg);
  }
  PairRates general{};
  if (quad) general = pair_rates_general(pair_cfg);
  b.quantity("r_same", r_same_closed, general.r_same, false);
  b.quantity("r_cross", r_same_closed - f_lw, general.r_cross, false);
  b.quantity("f_decoherence", f_lw, general.f_decoherence, false);
  if (mat.epsilon_r && *mat.epsilon_r != 1.0) {
    b.output("f_dielectric",
             Cell::number(dielectric_pair_factor(*mat.epsilon_r, particle,
                                                 bath, separation)));
    b.output("ratio_to_dielectric",
             Cell::number(pair_ratio_to_dielectric(mat, *mat.epsilon_r)));
  } else {
    b.output("f_dielectric", Cell::empty());
    b.output("ratio_to_dielectric", Cell::empty());
  }
  if (cfg.diagnostics) {
    b.diagnostic("lw_parameter_separation",
                 separation * thermal_wavenumber(temperature));
  }
  return b.row;
}

SweepRow drag_row(const Material& mat, const RunConfig& cfg,
                  double temperature) {
  RowBuilder b;
  b.method = cfg.method;
  common_inputs(b, mat, cfg, temperature);
  const Particle particle{cfg.radius_a, cfg.mass_m, cfg.beta};
  const ThermalBath bath{temperature};
  const bool closed = cfg.method != MethodChoice::Quadrature;
  const bool quad = cfg.method != MethodChoice::Closed;
  const DragResult c = closed
                           ? drag_coefficient(mat, particle, bath,
                                              Method::ClosedForm)
                           : DragResult{};
  const DragResult q = quad ? drag_coefficient(mat, particle, bath,
                                               Method::Quadrature)
                            : DragResult{};
  b.quantity("xi_scattering", c.xi_scattering, q.xi_scattering);
  b.quantity("xi_absorption", c.xi_absorption, q.xi_absorption);
  b.quantity("xi_total", c.xi_total, q.xi_total);
  if (mat.epsilon_r && *mat.epsilon_r != 1.0) {
    b.output("xi_dielectric", Cell::number(drag_dielectric(
                                  *mat.epsilon_r, particle, bath)));
    b.output("ratio_to_dielectric",
             Cell::number(drag_ratio(mat, *mat.epsilon_r)));
  } else {
    b.output("xi_dielectric", Cell::empty());
    b.output("ratio_to_dielectric", Cell::empty());
  }
  if (b.flag_mismatch) b.row.flags = "closed_quadrature_mismatch";
  return b.row;
}

SweepRow simulate_row(const Material& mat, const RunConfig& cfg,
                      double temperature) {
  RowBuilder b;
  b.method = cfg.method;
  common_inputs(b, mat, cfg, temperature);
  b.input("seed", Cell::str(std::to_string(cfg.seed)));
  const Particle particle{cfg.radius_a, cfg.mass_m, cfg.beta};
  const ThermalBath bath{temperature};
  const DragResult drag =
      drag_coefficient(mat, particle, bath, Method::ClosedForm);
  if (drag.xi_total == 0.0) {
    throw std::domain_error(
        "simulate: drag coefficient is zero (vacuum material)");
  }
  const double dp2 = total_diffusion(mat, particle, bath, Method::ClosedForm);
  const double diffusion_D = 0.5 * dp2;
  const double t_eff =
      diffusion_D / (particle.mass_m * drag.xi_total * kBoltzmann);

  LangevinParams lp;
  lp.xi = drag.xi_total;
  lp.diffusion_D = diffusion_D;
  lp.mass_m = particle.mass_m;
  lp.dt = cfg.sim.dt_xi / drag.xi_total;
  lp.steps = static_cast<long>(
      std::llround(cfg.sim.t_end_over_xi / cfg.sim.dt_xi));
  lp.n_particles = cfg.sim.n_particles;
  lp.seed = cfg.seed;
  lp.n_bins = cfg.sim.n_bins;
  const VelocityDistribution dist = langevin_simulate(lp);

  const double ke_target = 0.5 * kBoltzmann * t_eff;
  const double ks = ks_statistic_maxwell(dist.terminal_velocities,
                                         particle.mass_m, t_eff);
  b.output("xi_total", Cell::number(drag.xi_total));
  b.output("diffusion_d", Cell::number(diffusion_D));
  b.output("t_eff_k", Cell::number(t_eff));
  b.output("sample_mean_ke_j", Cell::number(dist.sample_mean_KE));
  b.output("equipartition_target_j", Cell::number(ke_target));
  b.output("equipartition_rel_error",
           Cell::number(std::abs(dist.sample_mean_KE - ke_target) / ke_target));
  b.output("ks_statistic", Cell::number(ks));
  b.output("ks_critical_1pct",
           Cell::number(ks_critical_value(0.01, dist.terminal_velocities.size())));
  b.output("fdt_ratio", Cell::number(fdt_ratio(mat, particle, bath)));
  b.output("langevin_steps", Cell::whole(lp.steps));
  b.output("langevin_dt_s", Cell::number(lp.dt));
  if (cfg.sim.fp_cells > 0) {
    const double sigma = std::sqrt(kBoltzmann * t_eff / particle.mass_m);
    FokkerPlanckGrid grid = gaussian_grid(-6.0 * sigma, 6.0 * sigma,
                                          cfg.sim.fp_cells, 3.0 * sigma,
                                          0.1 * sigma);
    grid = fokker_planck_solve(grid, drag.xi_total, particle.mass_m, t_eff,
                               cfg.sim.t_end_over_xi / drag.xi_total);
    b.output("fp_l1_to_maxwell",
             Cell::number(l1_distance_to_maxwell(grid, particle.mass_m,
                                                 t_eff)));
  }
  return b.row;
}

}  // namespace

SweepResult run(const RunConfig& config) {
  validate_config(config);
  SweepResult result;
  result.metadata.emplace_back("tool_version", kVersion);
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(constants_hash()));
    result.metadata.emplace_back("constants_hash", buf);
  }
  result.metadata.emplace_back("command", command_name(config.command));
  result.metadata.emplace_back("config", config_echo(config));

  if (config.command == Command::Ledger) {
    throw std::logic_error("run: the ledger command is handled by the CLI");
  }
  if (config.command == Command::Materials) {
    std::vector<Material> mats = builtin_materials();
    if (!config.materials_file.empty()) {
      for (Material& m : load_materials_file(config.materials_file)) {
        mats.push_back(std::move(m));
      }
    }
    for (const Material& m : mats) {
      SweepRow row;
      row.inputs.emplace_back("name", Cell::str(m.name));
      row.outputs.emplace_back("chi_r", Cell::number(m.chi_r));
      row.outputs.emplace_back("chi_i", Cell::number(m.chi_i));
      row.outputs.emplace_back("epsilon_r", m.epsilon_r
                                                ? Cell::number(*m.epsilon_r)
                                                : Cell::empty());
      result.rows.push_back(std::move(row));
    }
    return result;
  }

  const Material mat = resolve_material(config);

  // Build the flat sweep index set: temperatures x geometry (when used).
  const std::vector<double>* geometry = nullptr;
  if (config.command == Command::Decoherence) geometry = &config.delta_x;
  if (config.command == Command::Pair) geometry = &config.separation_d;
  const std::size_t n_geo = geometry ? geometry->size() : 1;
  const std::size_t n_rows = config.temperatures.size() * n_geo;
  result.rows.resize(n_rows);

  std::vector<std::string> errors(n_rows);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(n_rows); ++idx) {
    const double temperature = config.temperatures[idx / n_geo];
    const double geo = geometry ? (*geometry)[idx % n_geo] : 0.0;
    try {
      switch (config.command) {
        case Command::Diffusion:
          result.rows[idx] = diffusion_row(mat, config, temperature);
          break;
        case Command::Decoherence:
          result.rows[idx] = decoherence_row(mat, config, temperature, geo);
          break;
        case Command::Pair:
          result.rows[idx] = pair_row(mat, config, temperature, geo);
          break;
        case Command::Drag:
          result.rows[idx] = drag_row(mat, config, temperature);
          break;
        case Command::Simulate:
          result.rows[idx] = simulate_row(mat, config, temperature);
          break;
        default:
          break;
      }
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }

  // Error rows keep the schema of a successful row with empty outputs.
  const SweepRow* schema = nullptr;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (errors[i].empty()) {
      schema = &result.rows[i];
      break;
    }
  }
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (errors[i].empty()) continue;
    ++result.error_rows;
    SweepRow row;
    if (schema != nullptr) {
      for (const auto& [name, cell] : schema->inputs) {
        (void)cell;
        row.inputs.emplace_back(name, Cell::empty());
      }
      for (const auto& [name, cell] : schema->outputs) {
        (void)cell;
        row.outputs.emplace_back(name, Cell::empty());
      }
      for (const auto& [name, cell] : schema->diagnostics) {
        (void)cell;
        row.diagnostics.emplace_back(name, Cell::empty());
      }
    }
    row.flags = "error:" + errors[i];
    result.rows[i] = std::move(row);
  }
  if (schema == nullptr && result.error_rows > 0) {
    // Nothing succeeded; surface the first failure as a hard error.
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (!errors[i].empty()) throw std::runtime_error(errors[i]);
    }
  }
  return result;
}

}  // namespace diamag
