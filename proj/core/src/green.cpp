#include "reeb/sphere/green.hpp"

#include <cmath>
#include <numbers>

#include "reeb/error.hpp"
#include "reeb/sphere/grid.hpp"

namespace reeb {
namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;

double log_kernel(const SpherePoint& p, const SpherePoint& q) {
  const double d = chord_distance(p, q);
  if (d < 1e-14) throw SingularityError("green_function: p and q coincide");
  return -kInvTwoPi * std::log(d);
}

double cap_area(double eps) { return 2.0 * std::numbers::pi * (1.0 - std::cos(eps)); }

// Quadrature over the polar band a < theta < b around p.
template <class F>
double band_quadrature(const SpherePoint& p, double a, double b, const GreenQuadrature& rule,
                       F&& integrand) {
  const auto gl = gauss_legendre(rule.n_radial);
  const auto [e1, e2] = p.tangent_frame();
  const double half = 0.5 * (b - a);
  const double dpsi = 2.0 * std::numbers::pi / rule.n_angular;
  double acc = 0.0;
  for (int i = 0; i < rule.n_radial; ++i) {
    const double theta = a + half * (gl.nodes[i] + 1.0);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    double ring = 0.0;
    for (int j = 0; j < rule.n_angular; ++j) {
      const double psi = (j + 0.5) * dpsi;
      const SpherePoint q(ct * p.vec() + st * (std::cos(psi) * e1 + std::sin(psi) * e2));
      ring += integrand(q);
    }
    acc += gl.weights[i] * half * st * ring * dpsi;
  }
  return acc;
}

// Quadrature over the complement of the cap.
template <class F>
double outer_quadrature(const SpherePoint& p, const GreenQuadrature& rule, F&& integrand) {
  if (!(rule.cap_radius > 0.0) || rule.cap_radius >= std::numbers::pi) {
    throw DomainError("green quadrature: cap radius must lie in (0, pi)");
  }
  return band_quadrature(p, rule.cap_radius, std::numbers::pi, rule, integrand);
}

}  // namespace

double green_function(const SpherePoint& p, const SpherePoint& q) {
  return log_kernel(p, q) + kGreenConstant;
}

double green_cap_log_integral(double eps) {
  if (!(eps > 0.0) || eps > std::numbers::pi) {
    throw DomainError("green_cap_log_integral: radius must lie in (0, pi]");
  }
  // |p - q| = 2 sin(theta/2); substituting v = sin(theta/2) gives -4 int_0^v ln(2t) t dt.
  const double v = std::sin(0.5 * eps);
  return -2.0 * v * v * std::log(2.0 * v) + v * v;
}

double green_log_integral(const SpherePoint& p, const GreenQuadrature& rule) {
  return green_cap_log_integral(rule.cap_radius) +
         outer_quadrature(p, rule, [&](const SpherePoint& q) { return log_kernel(p, q); });
}

double green_integral(const SpherePoint& p, const GreenQuadrature& rule) {
  return green_cap_log_integral(rule.cap_radius) + kGreenConstant * cap_area(rule.cap_radius) +
         outer_quadrature(p, rule, [&](const SpherePoint& q) { return green_function(p, q); });
}

double green_convolve(const SpherePoint& p, const std::function<double(const SpherePoint&)>& f,
                      const GreenQuadrature& rule) {
  const double fp = f(p);
  // Inside the cap the kernel multiplies f(q) - f(p) = O(|p - q|), which regular quadrature handles.
  const double cap = fp * (green_cap_log_integral(rule.cap_radius) +
                           kGreenConstant * cap_area(rule.cap_radius)) +
                     band_quadrature(p, 0.0, rule.cap_radius, rule, [&](const SpherePoint& q) {
                       return green_function(p, q) * (f(q) - fp);
                     });
  return cap + outer_quadrature(p, rule, [&](const SpherePoint& q) {
           return green_function(p, q) * f(q);
         });
}

}  // namespace reeb
