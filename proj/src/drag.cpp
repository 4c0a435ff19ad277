// drag.cpp - Einstein-Hopf drag channels
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "diamag/drag.hpp"

#include <cmath>
#include <stdexcept>

#include "diamag/constants.hpp"
#include "diamag/special_math.hpp"

namespace diamag {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kQuadTol = 1e-11;
}  // namespace

DragResult drag_coefficient(const Material& mat, const Particle& p,
                            const ThermalBath& bath, Method method) {
  validate(mat);
  validate(p);
  if (!(bath.temperature_T > 0.0)) {
    throw std::domain_error("drag: bath temperature must be positive");
  }
  const double a3 = std::pow(p.radius_a, 3);
  const double S = cm_scattering_factor(mat);
  const double A = cm_absorption_factor(mat);
  const double alpha_sq = a3 * a3 / (kMu0 * kMu0) * S;
  const double alpha_i_abs = a3 / kMu0 * A;
  const double c = kSpeedOfLight;
  const double kappa = thermal_wavenumber(bath.temperature_T);

  DragResult out{0.0, 0.0, 0.0, p.mass_m};
  if (method == Method::ClosedForm) {
    out.xi_scattering = 32.0 * std::pow(kPi, 5) / 135.0 *
                        std::pow(p.radius_a, 6) * kHbar * p.beta / p.mass_m *
                        std::pow(kappa, 8) * S;
    if (A != 0.0) {
      out.xi_absorption = 5.0 * gamma_fn(5.0) * zeta_fn(5.0) /
                          (3.0 * kPi * kPi) * a3 * kHbar / p.mass_m *
                          std::pow(kappa, 5) * A;
    }
  } else {
    // Direct quadrature of int dw w^5 alpha_I(w) dn/dw per channel, with
    // alpha_I evaluated at each node frequency. dn/dw < 0; xi takes the
    // magnitude.
    const double base = kMu0 * kHbar / (3.0 * kPi * kPi * p.mass_m *
                                        std::pow(c, 5));
    const double wT = thermal_frequency(bath.temperature_T);
    if (alpha_sq != 0.0) {
      const QuadratureResult q = integrate_semiinfinite(
          [&](double x) {
            const double koc = wT * x / c;
            const double alpha_i_sca =
                kMu0 / (6.0 * kPi) * koc * koc * koc * alpha_sq * p.beta;
            return -std::pow(x, 5) * alpha_i_sca * bose_dn_dx(x);
          },
          kQuadTol);
      out.xi_scattering = base * q.value * std::pow(wT, 5);
    }
    if (alpha_i_abs != 0.0) {
      const QuadratureResult q = integrate_semiinfinite(
          [&](double x) {
            return -std::pow(x, 5) * alpha_i_abs * bose_dn_dx(x);
          },
          kQuadTol);
      out.xi_absorption = base * q.value * std::pow(wT, 5);
    }
  }
  out.xi_total = out.xi_scattering + out.xi_absorption;
  return out;
}

double drag_dielectric(double epsilon_r, const Particle& p,
                       const ThermalBath& bath) {
  validate(p);
  if (!(bath.temperature_T > 0.0)) {
    throw std::domain_error("drag: bath temperature must be positive");
  }
  const double kappa = thermal_wavenumber(bath.temperature_T);
  return 512.0 * std::pow(kPi, 7) / 135.0 * std::pow(p.radius_a, 6) * kHbar /
         p.mass_m * std::pow(kappa, 8) * dielectric_factor(epsilon_r);
}

double drag_ratio(const Material& mat, double epsilon_r) {
  validate(mat);
  return magnetic_to_dielectric_ratio(mat.chi_r, epsilon_r);
}

}  // namespace diamag
