// support.hpp - shared test oracles: fixed-seed Monte-Carlo sphere sampling
// and a brute-force zeta, kept independent of the library implementations
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>

#include "diamag/rng.hpp"

namespace diamag::test {

struct Vec3 {
  double x, y, z;
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
};

inline Vec3 unit_vector(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t counter) {
  const double u = uniform_open(counter_hash(seed, stream, 2 * counter));
  const double v = uniform_open(counter_hash(seed, stream, 2 * counter + 1));
  const double z = 1.0 - 2.0 * u;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.0 * 3.141592653589793238462643383279502884 * v;
  return Vec3{r * std::cos(phi), r * std::sin(phi), z};
}

struct McEstimate {
  double mean;
  double std_error;
};

/// Monte-Carlo estimate of int dO dO' g(khat, khat') over the two unit
/// spheres: (4 pi)^2 times the sample mean of g.
inline McEstimate mc_sphere_pair(
    const std::function<double(const Vec3&, const Vec3&)>& g, long n_samples,
    std::uint64_t seed) {
  double sum = 0.0, sum_sq = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    const Vec3 a = unit_vector(seed, 1, static_cast<std::uint64_t>(i));
    const Vec3 b = unit_vector(seed, 2, static_cast<std::uint64_t>(i));
    const double v = g(a, b);
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  const double total = 16.0 * 3.141592653589793238462643383279502884 *
                       3.141592653589793238462643383279502884;
  return McEstimate{total * mean, total * std::sqrt(var / n)};
}

/// zeta(s) by direct Kahan summation plus an integral tail; independent of
/// the Euler-Maclaurin machinery in the library.
inline double brute_force_zeta(double s, long n_terms = 2000000) {
  double sum = 0.0, comp = 0.0;
  for (long n = n_terms; n >= 1; --n) {
    const double term = std::pow(static_cast<double>(n), -s);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double N = static_cast<double>(n_terms);
  // Tail: N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12.
  return sum + std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s) +
         s * std::pow(N, -s - 1.0) / 12.0;
}

}  // namespace diamag::test
