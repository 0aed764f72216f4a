#pragma once

#include <algorithm>
#include <limits>
#include <numbers>
#include <vector>

// Brute-force capacity values, independent of the closed forms in the library.
namespace reeb::oracle {

/// c_k(B(1)) as the k-th entry (from 0) of the sorted multiset {i + j : i, j >= 0}.
inline std::vector<double> ball_sequence(int k_max) {
  std::vector<int> all;
  for (int i = 0; i <= k_max + 1; ++i) {
    for (int j = 0; j <= k_max + 1; ++j) all.push_back(i + j);
  }
  std::sort(all.begin(), all.end());
  return {all.begin(), all.begin() + k_max + 1};
}

/// min 2 pi (m + n) over the full square 0 <= m, n <= k.
inline double round_disk(int k) {
  int best = std::numeric_limits<int>::max();
  for (int m = 0; m <= k; ++m) {
    for (int n = 0; n <= k; ++n) {
      if ((m + 1) * (n + 1) >= k + 1) best = std::min(best, m + n);
    }
  }
  return 2.0 * std::numbers::pi * best;
}

}  // namespace reeb::oracle
