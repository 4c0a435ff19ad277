// constants.cpp - reduced-variable mapping and constants fingerprint
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "diamag/constants.hpp"

#include <cstdio>
#include <stdexcept>

namespace diamag {

ReducedFrequency to_reduced(double omega, double temperature) {
  if (temperature <= 0.0) {
    throw std::domain_error("to_reduced: bath temperature must be positive");
  }
  if (omega < 0.0) {
    throw std::domain_error("to_reduced: angular frequency must be non-negative");
  }
  return ReducedFrequency{kHbar * omega / (kBoltzmann * temperature)};
}

std::uint64_t constants_hash() {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g|%.17g|%.17g|%.17g|%.17g", kHbar,
                kSpeedOfLight, kBoltzmann, kMu0, kEps0);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char* p = buf; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace diamag
