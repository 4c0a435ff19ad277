// two_dipole.hpp - photon-emission rates of two induced magnetic dipoles and
// the spatial decoherence factor F = R11 - R12
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "diamag/diffusion.hpp"
#include "diamag/materials.hpp"

namespace diamag {

struct DipolePairConfig {
  Material material;
  Particle particle;
  ThermalBath bath;
  double separation_d;  // m, |x1 - x2| >= 0
};

/// r_same = R11 = R22, r_cross = R12 = R21, f_decoherence = R11 - R12.
/// r_cross is derived as r_same - f_decoherence so the defining identity is
/// exact; f is integrated with its own cancellation-free kernel.
struct PairRates {
  double r_same;
  double r_cross;
  double f_decoherence;
};

/// Numerical evaluation of R11/R12. The 4-fold angular integral is reduced
/// by isotropy to radial integrals over spherical-Bessel kernels,
///   int dO dO' (1+cos^2 t) e^{ik(khat-khat').d}
///     = 16 pi^2 [ (4/3) j0^2(kd) + (2/3) j2^2(kd) ],
/// leaving smooth 1-D integrands; the raw oscillatory form is kept only as a
/// Monte-Carlo test oracle. k_max truncates the radial integral (default
/// 40 k_B T / hbar c, where the Planck factor is < 1e-16 of its peak).
PairRates pair_rates_general(const DipolePairConfig& cfg, double k_max,
                             double tol);
PairRates pair_rates_general(const DipolePairConfig& cfg);

/// Long-wavelength closed form of F (valid for k_B T d / hbar c << 1):
///   d^2 (a^6 c/18 pi^3) S (kT/hbar c)^9 G(9) z(9)
/// + d^2 (a^3 c/3 pi^2 b) A (kT/hbar c)^6 G(6) z(6).
double decoherence_factor_lw(const DipolePairConfig& cfg);

/// Dielectric reference F_E = d^2 (8 a^6 c/9 pi) |(eps-1)/(eps+2)|^2
/// (kT/hbar c)^9 z(9) G(9).
double dielectric_pair_factor(double epsilon_r, const Particle& p,
                              const ThermalBath& bath, double separation_d);

/// F_B/F_E for chi_i = 0; identical to the diffusion and drag ratios.
double pair_ratio_to_dielectric(const Material& mat, double epsilon_r);

}  // namespace diamag
