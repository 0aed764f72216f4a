#pragma once

#include <functional>

#include <Eigen/Core>

namespace reeb {

using PhaseVector = Eigen::Matrix<double, 6, 1>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 1e-2;
  double min_step = 1e-13;   // relative to the integration span
  long max_steps = 10'000'000;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
};

using OdeRhs = std::function<PhaseVector(const PhaseVector&)>;
/// Applied to the state after every accepted step (e.g. projection onto a constraint set).
using OdeProjection = std::function<void(PhaseVector&)>;
/// Called after every accepted step with the time and the projected state.
using OdeObserver = std::function<void(double, const PhaseVector&)>;

/// Dormand-Prince 5(4) with PI step control for an autonomous system y' = f(y), from t = 0
/// to t = t_end (either sign). The last step lands on t_end exactly.
/// Throws StiffnessError when the step size falls below min_step * |t_end|.
PhaseVector integrate_dp45(const OdeRhs& f, PhaseVector y, double t_end, const OdeOptions& opts,
                           const OdeProjection& project = {}, const OdeObserver& observe = {},
                           OdeStats* stats = nullptr);

}  // namespace reeb
