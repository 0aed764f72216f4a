#pragma once

#include <string>
#include <utility>

#include "reeb/metrics/metric.hpp"

namespace reeb {

enum class CapacityDomain { Ball, RoundDiskBundle };

std::string to_string(CapacityDomain d);

/// c_k of a ball B(a) or of the round disk cotangent bundle D*(R)S^2.
struct CapacityValue {
  int k = 0;
  double value = 0.0;
  CapacityDomain domain = CapacityDomain::Ball;
  int d = 0;                      // ball witness: d^2 + d <= 2k <= d^2 + 3d
  std::pair<int, int> mn{0, 0};   // disk witness: (m+1)(n+1) >= k+1 with m + n minimal
};

/// c_k(B(a)) = d a.
CapacityValue ck_ball(int k, double a);

/// c_k(D*(R)S^2) = R min{2 pi (m + n) : (m+1)(n+1) >= k+1}, m, n >= 0.
CapacityValue ck_round_disk(int k, double radius);

struct CapacityInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Bracket [2 pi r, 2 pi R] for c_1 of the region enclosed by a fiberwise star-shaped hypersurface.
CapacityInterval c1_interval(const FiberBalance& balance);

}  // namespace reeb
