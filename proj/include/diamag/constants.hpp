// constants.hpp - SI physical constants and the reduced Planck variable
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>

namespace diamag {

/// SI constants, CODATA 2018. c, h (hence hbar) and k_B are exact since the
/// 2019 redefinition; mu_0 is the 2018 recommended value. eps_0 is fixed by
/// eps_0 mu_0 c^2 = 1 so the stored set is self-consistent to machine
/// precision. Values are compile-time literals; nothing is looked up at
/// runtime, so identical builds produce identical numbers.
struct PhysicalConstants {
  double hbar;   // J s
  double c;      // m / s
  double k_B;    // J / K
  double mu_0;   // N / A^2
  double eps_0;  // F / m
};

inline constexpr double kSpeedOfLight = 299792458.0;               // m/s
inline constexpr double kHbar = 1.0545718176461565e-34;            // J s, h / 2 pi
inline constexpr double kBoltzmann = 1.380649e-23;                 // J/K
inline constexpr double kMu0 = 1.25663706212e-6;                   // N/A^2
inline constexpr double kEps0 = 1.0 / (kMu0 * kSpeedOfLight * kSpeedOfLight);

inline constexpr PhysicalConstants kConstants{kHbar, kSpeedOfLight, kBoltzmann,
                                              kMu0, kEps0};

/// Dimensionless Planck variable x = hbar w / (k_B T), x >= 0.
struct ReducedFrequency {
  double x;
};

/// Map an angular frequency and bath temperature to the reduced variable.
/// Throws std::domain_error for T <= 0 or omega < 0.
ReducedFrequency to_reduced(double omega, double temperature);

/// k_B T / (hbar c), the thermal wavenumber scale [1/m].
inline double thermal_wavenumber(double temperature) {
  return kBoltzmann * temperature / (kHbar * kSpeedOfLight);
}

/// k_B T / hbar, the thermal angular-frequency scale [rad/s].
inline double thermal_frequency(double temperature) {
  return kBoltzmann * temperature / kHbar;
}

/// FNV-1a hash of the constant set, quoted in output metadata so that result
/// files are traceable to the constants that produced them.
std::uint64_t constants_hash();

}  // namespace diamag
