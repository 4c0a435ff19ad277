// stochastic.hpp - Langevin ensemble, Fokker-Planck solver, Maxwell steady
// state and the fluctuation-dissipation diagnostic
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <vector>

#include "diamag/diffusion.hpp"
#include "diamag/materials.hpp"

namespace diamag {

/// Parameters of the 1-D velocity Langevin process
///   dv = -xi v dt + sqrt(2 D/m^2) dW,
/// with D the momentum-diffusion constant (D = <dp^2>/dt / 2). The implied
/// bath temperature is T_eff = D/(m xi k_B). Requires dt*xi <= 0.01.
struct LangevinParams {
  double xi;           // 1/s
  double diffusion_D;  // kg^2 m^2 / s^3, >= 0
  double mass_m;       // kg
  double dt;           // s
  long steps;
  long n_particles;
  std::uint64_t seed;
  double v0 = 0.0;     // initial velocity, m/s
  int n_bins = 200;
};

struct VelocityDistribution {
  std::vector<double> bin_edges;  // n_bins + 1 edges, m/s
  std::vector<double> densities;  // n_bins values, 1/(m/s)
  double sample_mean_KE;          // J
  std::vector<double> terminal_velocities;  // by particle index, m/s
};

/// Explicit stochastic-Euler evolution of n_particles independent velocities.
/// Every random increment is a pure function of (seed, particle, step), so
/// the parallel and serial paths are bit-identical; histogram and mean are
/// accumulated in particle order after the evolution.
VelocityDistribution langevin_simulate(const LangevinParams& params);

/// Reference implementation: same numerics, no threading.
VelocityDistribution langevin_simulate_serial(const LangevinParams& params);

struct FokkerPlanckGrid {
  double v_min;
  double v_max;
  int n_cells;
  std::vector<double> w;  // probability density at cell centers
  double time = 0.0;

  double dv() const { return (v_max - v_min) / n_cells; }
  double v_center(int i) const { return v_min + (i + 0.5) * dv(); }
};

/// Make a grid holding the discretized Maxwell density (normalized to unit
/// discrete mass).
FokkerPlanckGrid maxwell_grid(double v_min, double v_max, int n_cells,
                              double mass_m, double temperature);

/// Make a grid holding a normalized Gaussian(center, sigma).
FokkerPlanckGrid gaussian_grid(double v_min, double v_max, int n_cells,
                               double center, double sigma);

/// Advance dw/dt = d/dv[ xi v w + (xi k_B T/m) dw/dv ] to t_end with an
/// explicit conservative scheme: exponentially-fitted upwind drift at cell
/// faces (Chang-Cooper weights, which keep the discrete Maxwell state
/// stationary), central diffusion, reflecting (zero-flux) boundaries.
/// dt = 0 picks the stable step 0.4 dv^2/(2 xi k_B T/m) automatically; an
/// explicit dt above the stability bound throws, naming the maximal step.
FokkerPlanckGrid fokker_planck_solve(FokkerPlanckGrid grid, double xi,
                                     double mass_m, double temperature,
                                     double t_end, double dt = 0.0);

/// 1-D Maxwell velocity density (m/2 pi k_B T)^{1/2} exp(-m v^2/2 k_B T).
double maxwell_pdf(double v, double mass_m, double temperature);

/// <dp^2>/dt / (2 m xi k_B T): the fluctuation-dissipation diagnostic. The
/// source relation asserts the value 1; the formulas actually give a
/// T-independent constant per channel (2/beta scattering, 1/(2 beta)
/// absorption), which is reported, not forced.
double fdt_ratio(const Material& mat, const Particle& p,
                 const ThermalBath& bath);

/// Kolmogorov-Smirnov statistic of samples against the Maxwell CDF.
double ks_statistic_maxwell(std::vector<double> samples, double mass_m,
                            double temperature);

/// Asymptotic two-sided KS critical value sqrt(-ln(alpha/2)/2)/sqrt(n).
double ks_critical_value(double alpha, std::size_t n);

/// L1 distance between a grid density and the Maxwell density at the cell
/// centers: sum |w_i - maxwell(v_i)| dv.
double l1_distance_to_maxwell(const FokkerPlanckGrid& grid, double mass_m,
                              double temperature);

}  // namespace diamag
