#pragma once

#include <functional>
#include <numbers>

#include "reeb/sphere/point.hpp"

namespace reeb {

/// Additive constant that makes the round-sphere Green's function integrate to zero.
inline constexpr double kGreenConstant =
    (2.0 * std::numbers::ln2 - 1.0) / (4.0 * std::numbers::pi);

/// Zero-mean Green's function of the round Laplacian: -(1/2pi) ln|p - q| + C.
double green_function(const SpherePoint& p, const SpherePoint& q);

/// Closed-form integral of -(1/2pi) ln|p - q| over the geodesic cap of radius eps around p.
double green_cap_log_integral(double eps);

struct GreenQuadrature {
  double cap_radius = 0.05;
  int n_radial = 96;    // Gauss-Legendre in the polar angle around p, per band
  int n_angular = 64;   // uniform in the azimuth around p
};

/// Integral over q of -(1/2pi) ln|p - q| dA(q). Equals 1 - 2 ln 2 for every p.
double green_log_integral(const SpherePoint& p, const GreenQuadrature& rule = {});

/// Integral over q of G(p, q) dA(q). Zero up to quadrature error.
double green_integral(const SpherePoint& p, const GreenQuadrature& rule = {});

/// Integral over q of G(p, q) f(q) dA(q); the cap carries f(p) in closed form plus a regular remainder.
double green_convolve(const SpherePoint& p, const std::function<double(const SpherePoint&)>& f,
                      const GreenQuadrature& rule = {});

}  // namespace reeb
