// materials.hpp - material response models: complex magnetic susceptibility,
// Clausius-Mossotti polarizabilities and Rayleigh-limit cross sections
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace diamag {

/// Bulk response of a substance. chi is the complex volume magnetic
/// susceptibility chi_r + i chi_i; epsilon_r is the (real) relative
/// permittivity, optional because it is not known for every preset.
/// chi and epsilon are treated as frequency-independent.
struct Material {
  std::string name;
  double chi_r = 0.0;
  double chi_i = 0.0;
  std::optional<double> epsilon_r;
};

/// Nanosphere geometry. beta is the dimensionless magnetic-dipole shape
/// factor, 1/2 for a sphere.
struct Particle {
  double radius_a;    // m
  double mass_m;      // kg
  double beta = 0.5;  // dimensionless
};

struct MagneticPolarizability {
  double alpha_r;      // J/T^2
  double alpha_i_abs;  // J/T^2, absorption-only imaginary part
  double alpha_sq;     // (J/T^2)^2, |alpha|^2
};

struct CrossSections {
  double sigma_sca;  // m^2
  double sigma_abs;  // m^2
  double sigma_ext;  // m^2, = sigma_sca + sigma_abs by construction
};

/// Throws std::domain_error if the fields violate the model's domain
/// (chi_i < 0, Clausius-Mossotti denominator zero, non-positive geometry).
void validate(const Material& mat);
void validate(const Particle& p);

/// Dimensionless Clausius-Mossotti combinations shared by every closed form:
///   D = (3+chi_r)^2 + chi_i^2
///   S = [(chi_r^2+3chi_r+chi_i^2)^2 + 9 chi_i^2] / D^2   (scattering, |alpha|^2)
///   A = 3 chi_i / D                                      (absorption)
double cm_scattering_factor(const Material& mat);
double cm_absorption_factor(const Material& mat);

/// Clausius-Mossotti magnetic polarizability of a sphere of radius a.
MagneticPolarizability cm_polarizability(const Material& mat, const Particle& p);

/// Total extinction-side imaginary polarizability
///   (mu_0/6pi)(w/c)^3 |alpha|^2 beta + alpha_i_abs.
double alpha_i_extinction(const Material& mat, const Particle& p, double omega);

/// Rayleigh-limit scattering/absorption/extinction cross sections.
CrossSections cross_sections(const Material& mat, const Particle& p, double omega);

/// Magnetic-dipole Mie coefficient a1 = (i/6pi) mu_0 k^3 alpha beta with
/// alpha = alpha_r + i alpha_i_abs.
std::complex<double> mie_a1(const Material& mat, const Particle& p, double k);

/// ((epsilon-1)/(epsilon+2))^2, the dielectric comparison factor.
double dielectric_factor(double epsilon_r);

/// Built-in presets: nanodiamond, superconductor, vacuum.
const std::vector<Material>& builtin_materials();

/// Look up a material by name among the built-ins plus `extra`.
Material find_material(const std::string& name,
                       const std::vector<Material>& extra = {});

/// Parse a preset file: `[name]` section headers followed by
/// `key = value` lines with keys chi_r, chi_i, epsilon_r. `#` starts a
/// comment. Unknown keys are rejected.
std::vector<Material> parse_materials(std::istream& in);
std::vector<Material> load_materials_file(const std::string& path);

}  // namespace diamag
