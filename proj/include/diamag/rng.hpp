// rng.hpp - stateless counter-based random streams
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <cstdint>

namespace diamag {

// Each variate is a pure function of (seed, stream, counter), so work can be
// partitioned across threads in any order and still reproduce bit-identical
// results.

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdull;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ull;
  z ^= z >> 33;
  return z;
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
  std::uint64_t h = seed + 0x9e3779b97f4a7c15ull * (stream + 1) +
                    0xd1b54a32d192ed03ull * (counter + 1);
  return mix64(mix64(h) + stream);
}

/// Uniform in the open interval (0,1); never returns 0 or 1, so logs are safe.
inline double uniform_open(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter-derived uniforms.
inline double gaussian_at(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t counter) {
  const double u1 = uniform_open(counter_hash(seed, stream, 2 * counter));
  const double u2 = uniform_open(counter_hash(seed, stream, 2 * counter + 1));
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace diamag
