// diffusion.cpp - momentum diffusion in a thermal electromagnetic bath
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "diamag/diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include "diamag/constants.hpp"
#include "diamag/special_math.hpp"

namespace diamag {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kQuadTol = 1e-11;

// Magnetic scattering channel, (hbar^2 mu_0^2 / 9 pi^3 c^8) |alpha|^2 I8 with
// I8 = int dw w^8 [n^2+n]. Electric and coupled channels are 3x and -2x.
double magnetic_channel(const Material& mat, const Particle& p,
                        const ThermalBath& bath, Method method) {
  const double a3 = p.radius_a * p.radius_a * p.radius_a;
  const double alpha_sq =
      a3 * a3 / (kMu0 * kMu0) * cm_scattering_factor(mat);
  const double c4 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight *
                    kSpeedOfLight;
  const double pref =
      kHbar * kHbar * kMu0 * kMu0 / (9.0 * kPi * kPi * kPi * c4 * c4);
  double integral;
  if (method == Method::ClosedForm) {
    integral = bose_integral(8, BoseWeight::OccupationSquaredPlusOccupation,
                             bath.temperature_T);
  } else {
    const double wT = thermal_frequency(bath.temperature_T);
    const QuadratureResult q = integrate_semiinfinite(
        [](double x) {
          return x * x * x * x * x * x * x * x * bose_n2_plus_n(x);
        },
        kQuadTol);
    integral = q.value * std::pow(wT, 9);
  }
  return pref * alpha_sq * integral;
}

// Absorption channel, (mu_0 hbar^2 / 3 pi^2 c^5 beta) alpha_i_abs I5 with
// I5 = int dw w^5 [n^2+n].
double absorption_channel(const Material& mat, const Particle& p,
                          const ThermalBath& bath, Method method) {
  const double A = cm_absorption_factor(mat);
  if (A == 0.0) return 0.0;
  const double a3 = p.radius_a * p.radius_a * p.radius_a;
  const double alpha_i_abs = a3 / kMu0 * A;
  const double c5 = std::pow(kSpeedOfLight, 5);
  const double pref =
      kMu0 * kHbar * kHbar / (3.0 * kPi * kPi * c5 * p.beta);
  double integral;
  if (method == Method::ClosedForm) {
    integral = bose_integral(5, BoseWeight::OccupationSquaredPlusOccupation,
                             bath.temperature_T);
  } else {
    const double wT = thermal_frequency(bath.temperature_T);
    const QuadratureResult q = integrate_semiinfinite(
        [](double x) { return x * x * x * x * x * bose_n2_plus_n(x); },
        kQuadTol);
    integral = q.value * std::pow(wT, 6);
  }
  return pref * alpha_i_abs * integral;
}

}  // namespace

DiffusionBreakdown diffusion_components(const Material& mat, const Particle& p,
                                        const ThermalBath& bath,
                                        Method method) {
  validate(mat);
  validate(p);
  if (!(bath.temperature_T > 0.0)) {
    throw std::domain_error("diffusion: bath temperature must be positive");
  }
  const double mag = magnetic_channel(mat, p, bath, method);
  DiffusionBreakdown out;
  out.dp2_magnetic = mag;
  out.dp2_electric = 3.0 * mag;
  out.dp2_coupled = -2.0 * mag;
  out.dp2_absorption = absorption_channel(mat, p, bath, method);
  out.dp2_total = out.dp2_magnetic + out.dp2_electric + out.dp2_coupled +
                  out.dp2_absorption;
  return out;
}

double total_diffusion(const Material& mat, const Particle& p,
                       const ThermalBath& bath, Method method) {
  return diffusion_components(mat, p, bath, method).dp2_total;
}

DecoherenceResult decoherence_rate(const Material& mat, const Particle& p,
                                   const ThermalBath& bath, double delta_x,
                                   Method method) {
  if (delta_x < 0.0) {
    throw std::domain_error("decoherence_rate: delta_x must be >= 0");
  }
  const double lambda =
      total_diffusion(mat, p, bath, method) / (2.0 * kHbar * kHbar);
  return DecoherenceResult{lambda, lambda * delta_x * delta_x, delta_x};
}

double magnetic_to_dielectric_ratio(double chi_r, double epsilon_r) {
  if (epsilon_r == 1.0) {
    throw std::domain_error(
        "dielectric comparison: singular at epsilon = 1 (zero dielectric "
        "response)");
  }
  if (epsilon_r == -2.0) {
    throw std::domain_error("dielectric comparison: singular at epsilon = -2");
  }
  const double m = chi_r / (3.0 + chi_r);
  const double e = (epsilon_r + 2.0) / (epsilon_r - 1.0);
  return 1.0 / (16.0 * kPi * kPi) * m * m * e * e;
}

double diffusion_ratio_to_dielectric(const Material& mat, double epsilon_r) {
  validate(mat);
  return magnetic_to_dielectric_ratio(mat.chi_r, epsilon_r);
}

}  // namespace diamag
