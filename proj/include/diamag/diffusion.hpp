// diffusion.hpp - single-particle momentum-diffusion constants and the
// long-wavelength decoherence rate
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "diamag/materials.hpp"

namespace diamag {

struct ThermalBath {
  double temperature_T;  // K, > 0
};

/// Evaluation route: analytic Gamma-zeta closed form, or direct adaptive
/// quadrature of the frequency integrals (the independent oracle).
enum class Method { ClosedForm, Quadrature };

/// Momentum-diffusion constants <dp^2>/dt [kg^2 m^2 / s^3]. The coupled term
/// is signed (it is negative); the total is the sum of all four channels.
/// For chi_i = 0 the components obey electric : coupled : magnetic = 3:-2:1
/// and the total is twice the magnetic term.
struct DiffusionBreakdown {
  double dp2_magnetic;
  double dp2_electric;
  double dp2_coupled;
  double dp2_absorption;
  double dp2_total;
};

struct DecoherenceResult {
  double lambda_scattering;  // 1/(m^2 s)
  double gamma;              // 1/s
  double delta_x;            // m
};

DiffusionBreakdown diffusion_components(const Material& mat, const Particle& p,
                                        const ThermalBath& bath,
                                        Method method = Method::ClosedForm);

/// <dp^2>/dt, scattering (a^6 T^9) plus absorption (a^3 T^6) channels.
double total_diffusion(const Material& mat, const Particle& p,
                       const ThermalBath& bath,
                       Method method = Method::ClosedForm);

/// Long-wavelength decoherence rate gamma = Lambda (dx)^2 with
/// Lambda = <dp^2>/dt / (2 hbar^2). The long-wavelength validity parameter
/// dx k_B T/(hbar c) is reported by the CLI, not enforced here.
DecoherenceResult decoherence_rate(const Material& mat, const Particle& p,
                                   const ThermalBath& bath, double delta_x,
                                   Method method = Method::ClosedForm);

/// gamma_B/gamma_E = (1/16pi^2) (chi_r/(3+chi_r))^2 |(eps+2)/(eps-1)|^2,
/// valid for chi_i = 0. Throws for eps = 1 (no dielectric contrast).
double diffusion_ratio_to_dielectric(const Material& mat, double epsilon_r);

/// Shared by the three comparison formulas (diffusion, pair, drag), which the
/// source equations make identical.
double magnetic_to_dielectric_ratio(double chi_r, double epsilon_r);

}  // namespace diamag
