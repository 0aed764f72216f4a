#pragma once

#include <cmath>
#include <random>

#include "reeb/sphere/harmonics.hpp"
#include "reeb/sphere/point.hpp"

namespace reeb::testing {

inline SpherePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return SpherePoint(Vec3(n(rng), n(rng), n(rng)));
}

/// Coefficients ~ N(0, 1) / (1 + l)^decay; optionally only even degrees, optionally mean zero.
inline HarmonicField random_field(std::mt19937_64& rng, int band_limit, double decay = 1.0,
                                  bool even_only = false, bool mean_zero = false) {
  std::normal_distribution<double> n;
  HarmonicField f(band_limit);
  for (int l = 0; l <= band_limit; ++l) {
    if (even_only && l % 2 == 1) continue;
    for (int m = -l; m <= l; ++m) f(l, m) = n(rng) / std::pow(1.0 + l, decay);
  }
  if (mean_zero) f(0, 0) = 0.0;
  return f;
}

}  // namespace reeb::testing
