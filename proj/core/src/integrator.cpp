#include "reeb/geodesics/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "reeb/error.hpp"

namespace reeb {
namespace {

// Dormand-Prince tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b_hat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

PhaseVector integrate_dp45(const OdeRhs& f, PhaseVector y, double t_end, const OdeOptions& opts,
                           const OdeProjection& project, const OdeObserver& observe,
                           OdeStats* stats) {
  if (t_end == 0.0) return y;
  const double span = std::abs(t_end);
  const double dir = t_end > 0.0 ? 1.0 : -1.0;
  const double h_min = opts.min_step * span;
  double h = std::min(opts.initial_step, span);
  double t = 0.0;
  double err_prev = 1e-4;
  PhaseVector k1 = f(y);
  long steps = 0;
  OdeStats local;

  while (dir * (t_end - t) > 0.0) {
    if (++steps > opts.max_steps) {
      throw StiffnessError("integrate_dp45: exceeded " + std::to_string(opts.max_steps) +
                           " steps at t = " + std::to_string(t));
    }
    const double remaining = std::abs(t_end - t);
    bool last = false;
    if (h >= remaining) {
      h = remaining;
      last = true;
    }
    const double hs = dir * h;
    const PhaseVector k2 = f(y + hs * a21 * k1);
    const PhaseVector k3 = f(y + hs * (a31 * k1 + a32 * k2));
    const PhaseVector k4 = f(y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const PhaseVector k5 = f(y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const PhaseVector k6 = f(y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    PhaseVector y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const PhaseVector k7 = f(y_new);
    const PhaseVector err_vec = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double scale = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(err_vec[i]) / scale);
    }

    if (err <= 1.0) {
      t = last ? t_end : t + hs;
      if (project) {
        project(y_new);
        k1 = f(y_new);
      } else {
        k1 = k7;
      }
      y = y_new;
      ++local.accepted;
      if (observe) observe(t, y);
      // PI controller (Hairer-Wanner constants for order 5).
      const double fac = err == 0.0 ? 5.0
                                    : std::clamp(0.9 * std::pow(err, -0.7 / 5.0) *
                                                     std::pow(err_prev, 0.4 / 5.0),
                                                 0.2, 5.0);
      err_prev = std::max(err, 1e-4);
      h *= fac;
    } else {
      ++local.rejected;
      h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
    }
    if (h < h_min) {
      throw StiffnessError("integrate_dp45: step size underflow (h = " + std::to_string(h) +
                           ") at t = " + std::to_string(t));
    }
  }
  if (stats) *stats = local;
  return y;
}

}  // namespace reeb
