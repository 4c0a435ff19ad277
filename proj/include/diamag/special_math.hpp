// special_math.hpp - Gamma/zeta, Planck-weighted integrals, adaptive
// quadrature and the two-sphere angular reduction
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace diamag {

/// Thermal weight applied under a semi-infinite frequency integral.
enum class BoseWeight {
  OccupationOnly,                  // n(w)
  OccupationSquaredPlusOccupation, // n^2(w) + n(w)
  OccupationDerivative             // dn/dw
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

/// Raised when the adaptive quadrature exhausts its evaluation budget. The
/// best available estimate is carried along so callers can still report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

/// Gamma function for s > 0 (Lanczos, ~15 significant digits).
double gamma_fn(double s);

/// Riemann zeta for s > 1 (Euler-Maclaurin accelerated series).
double zeta_fn(double s);

/// Closed form of integral_0^inf dw w^p x weight(w) at temperature T:
///   OccupationOnly                  -> Gamma(p+1) zeta(p+1) (k_B T/hbar)^(p+1)
///   OccupationSquaredPlusOccupation -> Gamma(p+1) zeta(p)   (k_B T/hbar)^(p+1)
///   OccupationDerivative            -> -Gamma(p+1) zeta(p)  (k_B T/hbar)^p
/// The n^2+n and derivative weights need p >= 2 (zeta(1) diverges).
double bose_integral(int p, BoseWeight weight, double temperature);

// Planck weights in the reduced variable x = hbar w / k_B T. Evaluated via
// expm1 so the x->0 limit is exact; treated as 0 beyond x = 700 where exp(x)
// overflows binary64.
double bose_n(double x);          // 1/(e^x - 1)
double bose_n2_plus_n(double x);  // e^x/(e^x - 1)^2, computed directly
double bose_dn_dx(double x);      // -e^x/(e^x - 1)^2

/// Adaptive Gauss-Kronrod (7-15) integration of f over [0, inf). The bulk
/// [0, 40] is integrated in the given variable; the tail is folded onto (0,1]
/// through x = 40 - ln u. tol is relative to the integral magnitude;
/// abs_error_estimate <= tol*|value| on return, otherwise ConvergenceError.
QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        double tol);

/// Same engine on a finite interval [a, b].
QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double a, double b, double tol);

/// Isotropic two-sphere cubature: for g a function of u = khat . khat',
///   integral dOmega dOmega' g = 8 pi^2 integral_{-1}^{1} g(u) du.
double sphere_pair_cubature(const std::function<double(double)>& g, double tol);

}  // namespace diamag
