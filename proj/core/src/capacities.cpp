#include "reeb/capacities.hpp"

#include <numbers>

#include "reeb/error.hpp"

namespace reeb {

std::string to_string(CapacityDomain d) {
  return d == CapacityDomain::Ball ? "ball" : "round_disk_bundle";
}

CapacityValue ck_ball(int k, double a) {
  if (k < 0) throw DomainError("ck_ball: k must be nonnegative");
  if (!(a > 0.0)) throw DomainError("ck_ball: capacity a must be positive");
  const long long twice_k = 2LL * k;
  long long d = 0;
  while (!(d * d + d <= twice_k && twice_k <= d * d + 3 * d)) ++d;
  CapacityValue out;
  out.k = k;
  out.domain = CapacityDomain::Ball;
  out.d = static_cast<int>(d);
  out.value = static_cast<double>(d) * a;
  return out;
}

CapacityValue ck_round_disk(int k, double radius) {
  if (k < 0) throw DomainError("ck_round_disk: k must be nonnegative");
  if (!(radius > 0.0)) throw DomainError("ck_round_disk: radius must be positive");
  // (k, 0) already satisfies the constraint, so m, n <= k is enough.
  int best_m = k;
  int best_n = 0;
  for (int m = 0; m <= k; ++m) {
    // smallest n with (m+1)(n+1) >= k+1
    const int n = (k + 1 + m) / (m + 1) - 1;
    if (m + n < best_m + best_n || (m + n == best_m + best_n && m < best_m)) {
      best_m = m;
      best_n = n;
    }
  }
  CapacityValue out;
  out.k = k;
  out.domain = CapacityDomain::RoundDiskBundle;
  out.mn = {best_m, best_n};
  out.value = radius * 2.0 * std::numbers::pi * (best_m + best_n);
  return out;
}

CapacityInterval c1_interval(const FiberBalance& balance) {
  if (!(balance.inradius > 0.0) || !(balance.circumradius > 0.0)) {
    throw DomainError("c1_interval: radii must be positive");
  }
  if (balance.inradius > balance.circumradius) {
    throw DomainError("c1_interval: inradius exceeds circumradius");
  }
  return {2.0 * std::numbers::pi * balance.inradius, 2.0 * std::numbers::pi * balance.circumradius};
}

}  // namespace reeb
