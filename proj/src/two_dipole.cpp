// two_dipole.cpp - pair emission rates and decoherence factor
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "diamag/two_dipole.hpp"

#include <cmath>
#include <stdexcept>

#include "diamag/constants.hpp"
#include "diamag/special_math.hpp"

namespace diamag {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kDefaultTol = 1e-9;

// 1 - j0(z)^2 without the subtraction loss that dominates at small kd.
double one_minus_j0_sq(double z) {
  if (std::abs(z) < 0.05) {
    const double z2 = z * z;
    const double one_minus_j0 =
        z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0 * (1.0 - z2 / 72.0)));
    return one_minus_j0 * (2.0 - one_minus_j0);
  }
  const double j0 = std::sin(z) / z;
  return (1.0 - j0) * (1.0 + j0);
}

double sph_j2(double z) {
  const double az = std::abs(z);
  if (az < 0.5) {
    const double z2 = z * z;
    return z2 / 15.0 *
           (1.0 - z2 / 14.0 * (1.0 - z2 / 36.0 * (1.0 - z2 / 66.0)));
  }
  return (3.0 / (z * z * z) - 1.0 / z) * std::sin(z) -
         3.0 / (z * z) * std::cos(z);
}

// Angular weights of the isotropic reduction. The same-site rate carries the
// constant 64 pi^2/3; the difference F carries a kernel that vanishes
// quadratically at kd -> 0, evaluated in a cancellation-free form.
double angular_same() { return 64.0 * kPi * kPi / 3.0; }

double angular_difference(double z) {
  const double j2 = sph_j2(z);
  return 16.0 * kPi * kPi *
         (4.0 / 3.0 * one_minus_j0_sq(z) - 2.0 / 3.0 * j2 * j2);
}

struct RadialSetup {
  double kappa;        // k_B T/(hbar c)
  double x_max;        // k_max/kappa
  double sca_weight;   // (mu_0/6pi) |alpha|^2 kappa^3, folded into k^3 kernel
  double abs_weight;   // alpha_i_abs / beta
  double pref;         // 3 mu_0 c /(64 pi^4) * kappa^4
};

RadialSetup make_setup(const DipolePairConfig& cfg, double k_max) {
  validate(cfg.material);
  validate(cfg.particle);
  if (!(cfg.bath.temperature_T > 0.0)) {
    throw std::domain_error("pair rates: bath temperature must be positive");
  }
  if (cfg.separation_d < 0.0) {
    throw std::domain_error("pair rates: separation must be >= 0");
  }
  const double a3 = std::pow(cfg.particle.radius_a, 3);
  const double alpha_sq =
      a3 * a3 / (kMu0 * kMu0) * cm_scattering_factor(cfg.material);
  const double alpha_i_abs =
      a3 / kMu0 * cm_absorption_factor(cfg.material);
  RadialSetup s;
  s.kappa = thermal_wavenumber(cfg.bath.temperature_T);
  if (!(k_max > 0.0)) {
    throw std::domain_error("pair rates: k_max must be positive");
  }
  s.x_max = k_max / s.kappa;
  // Planck weight e^{-x} falls below 1e-12 of its peak only past x = 27.6
  if (s.x_max < 28.0) {
    throw std::domain_error(
        "pair rates: k_max too small; Planck tail not negligible below "
        "28 k_B T/(hbar c)");
  }
  const double kappa3 = s.kappa * s.kappa * s.kappa;
  s.sca_weight = kMu0 / (6.0 * kPi) * alpha_sq * kappa3;
  s.abs_weight = alpha_i_abs / cfg.particle.beta;
  s.pref = 3.0 * kMu0 * kSpeedOfLight / (64.0 * std::pow(kPi, 4)) *
           std::pow(s.kappa, 4);
  return s;
}

// k^3 [ (mu_0/6pi) k^3 |alpha|^2 + alpha_i_abs/beta ] n(k) at k = kappa x.
double radial_kernel(const RadialSetup& s, double x) {
  const double x3 = x * x * x;
  return x3 * (s.sca_weight * x3 + s.abs_weight) * bose_n(x);
}

}  // namespace

PairRates pair_rates_general(const DipolePairConfig& cfg, double k_max,
                             double tol) {
  const RadialSetup s = make_setup(cfg, k_max);
  if (s.sca_weight == 0.0 && s.abs_weight == 0.0) {
    return PairRates{0.0, 0.0, 0.0};  // vacuum
  }
  const double kd = s.kappa * cfg.separation_d;  // z = kd * x at node x
  try {
    const QuadratureResult same = integrate_interval(
        [&](double x) { return radial_kernel(s, x) * angular_same(); }, 0.0,
        s.x_max, tol);
    double f = 0.0;
    if (cfg.separation_d > 0.0) {
      const QuadratureResult diff = integrate_interval(
          [&](double x) {
            return radial_kernel(s, x) * angular_difference(kd * x);
          },
          0.0, s.x_max, tol);
      f = s.pref * diff.value;
    }
    const double r_same = s.pref * same.value;
    return PairRates{r_same, r_same - f, f};
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(
        std::string(e.what()) +
            " (oscillatory pair integral; reduce k_max*separation)",
        e.best_estimate);
  }
}

PairRates pair_rates_general(const DipolePairConfig& cfg) {
  if (!(cfg.bath.temperature_T > 0.0)) {
    throw std::domain_error("pair rates: bath temperature must be positive");
  }
  return pair_rates_general(
      cfg, 40.0 * thermal_wavenumber(cfg.bath.temperature_T), kDefaultTol);
}

double decoherence_factor_lw(const DipolePairConfig& cfg) {
  validate(cfg.material);
  validate(cfg.particle);
  if (cfg.separation_d < 0.0) {
    throw std::domain_error("pair rates: separation must be >= 0");
  }
  const double a3 = std::pow(cfg.particle.radius_a, 3);
  const double alpha_sq =
      a3 * a3 / (kMu0 * kMu0) * cm_scattering_factor(cfg.material);
  const double alpha_i_abs =
      a3 / kMu0 * cm_absorption_factor(cfg.material);
  const double d2 = cfg.separation_d * cfg.separation_d;
  const double c = kSpeedOfLight;
  // Occupation-only weight here; the single-particle diffusion constant uses
  // the n^2+n weight. Both come from the same thermal-integral operation.
  const double sca =
      kMu0 / (6.0 * kPi) * alpha_sq *
      bose_integral(8, BoseWeight::OccupationOnly, cfg.bath.temperature_T) /
      std::pow(c, 9);
  double abs_term = 0.0;
  if (alpha_i_abs != 0.0) {
    abs_term =
        alpha_i_abs / cfg.particle.beta *
        bose_integral(5, BoseWeight::OccupationOnly, cfg.bath.temperature_T) /
        std::pow(c, 6);
  }
  return kMu0 * c / (3.0 * kPi * kPi) * d2 * (sca + abs_term);
}

double dielectric_pair_factor(double epsilon_r, const Particle& p,
                              const ThermalBath& bath, double separation_d) {
  validate(p);
  if (separation_d < 0.0) {
    throw std::domain_error("pair rates: separation must be >= 0");
  }
  const double a6 = std::pow(p.radius_a, 6);
  const double kappa = thermal_wavenumber(bath.temperature_T);
  return separation_d * separation_d * 8.0 * a6 * kSpeedOfLight /
         (9.0 * kPi) * dielectric_factor(epsilon_r) * std::pow(kappa, 9) *
         zeta_fn(9.0) * gamma_fn(9.0);
}

double pair_ratio_to_dielectric(const Material& mat, double epsilon_r) {
  validate(mat);
  return magnetic_to_dielectric_ratio(mat.chi_r, epsilon_r);
}

}  // namespace diamag
