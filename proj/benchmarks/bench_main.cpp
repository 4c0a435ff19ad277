// bench_main.cpp - serial vs OpenMP throughput of the hot kernels
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <chrono>
#include <cstdio>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diamag/constants.hpp"
#include "diamag/emit.hpp"
#include "diamag/stochastic.hpp"
#include "diamag/sweep.hpp"

using namespace diamag;

namespace {

template <typename F>
double time_it(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void bench_langevin() {
  LangevinParams p;
  p.xi = 1.0;
  p.mass_m = 1.0;
  p.diffusion_D = 1.0;
  p.dt = 0.01;
  p.steps = 400;
  p.n_particles = 200000;
  p.seed = 42;

  VelocityDistribution serial, parallel;
  const double t_serial = time_it([&] { serial = langevin_simulate_serial(p); });
  const double t_parallel = time_it([&] { parallel = langevin_simulate(p); });
  const bool identical =
      serial.terminal_velocities == parallel.terminal_velocities &&
      serial.sample_mean_KE == parallel.sample_mean_KE;
  std::printf(
      "langevin   n=%ld steps=%ld      serial %7.3f s   omp(%d) %7.3f s   "
      "speedup %.2fx   results %s\n",
      p.n_particles, p.steps, t_serial, threads(), t_parallel,
      t_serial / t_parallel, identical ? "bit-identical" : "DIFFER");
}

void bench_sweep() {
  RunConfig cfg;
  cfg.command = Command::Pair;
  cfg.material = "nanodiamond";
  cfg.temperatures = {10, 20, 40, 77, 150, 300, 600, 1000};
  cfg.separation_d = {1e-9, 3e-9, 1e-8, 3e-8};
  cfg.method = MethodChoice::Both;

  std::string out_serial, out_parallel;
  double t_serial = 0.0, t_parallel = 0.0;
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  t_serial = time_it([&] {
    std::ostringstream os;
    emit_csv(run(cfg), os);
    out_serial = os.str();
  });
#ifdef _OPENMP
  omp_set_num_threads(max_threads);
#endif
  t_parallel = time_it([&] {
    std::ostringstream os;
    emit_csv(run(cfg), os);
    out_parallel = os.str();
  });
  std::printf(
      "pair sweep 32 rows (both)      serial %7.3f s   omp(%d) %7.3f s   "
      "speedup %.2fx   output %s\n",
      t_serial, threads(), t_parallel, t_serial / t_parallel,
      out_serial == out_parallel ? "byte-identical" : "DIFFERS");
}

void bench_fokker_planck() {
  const double T = 1.0 / kBoltzmann;
  FokkerPlanckGrid g = maxwell_grid(-6.0, 6.0, 2000, 1.0, T);
  const double t = time_it(
      [&] { g = fokker_planck_solve(g, 1.0, 1.0, T, 2.0); });
  // steps = t_end / (0.4 dv^2 / (2 Dv))
  const double dv = g.dv();
  const double steps = 2.0 / (0.4 * dv * dv / 2.0);
  std::printf(
      "fokker-planck 2000 cells       serial %7.3f s   %.2e cell-updates/s "
      "(single-threaded solver)\n",
      t, steps * 2000.0 / t);
}

}  // namespace

int main() {
  std::printf("diamag kernel benchmark, %d OpenMP thread(s)\n\n", threads());
  bench_langevin();
  bench_sweep();
  bench_fokker_planck();
  return 0;
}
