#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dual.hpp"

namespace svmflow::fw {

enum class StepRule { kStandard, kExactLineSearch };
enum class Stop { kGap, kIterations };

struct FwConfig {
  int max_iters = 200;
  double gap_tol = 0.0;  // 0 runs the full iteration budget
  StepRule step_rule = StepRule::kStandard;

  void validate() const;
};

struct FwTrace {
  std::vector<SimplexPoint> iterates;    // mu_0 (uniform), then one per step
  std::vector<double> objective_values;  // f at each iterate
  std::vector<double> gaps;              // duality gap at each iterate
  Stop stopped_by = Stop::kIterations;

  const SimplexPoint& final_state() const { return iterates.back(); }
  int iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

/// Linear minimization oracle over the simplex: the vertex minimizing
/// <grad, s> is e_j with j the smallest index attaining min_j grad_j.
/// Returns the 0-based index; throws InvalidArgument on non-finite input.
Eigen::Index lmo_simplex(const Eigen::Ref<const Eigen::VectorXd>& grad);

/// Conditional gradient iteration from the uniform point. Per iteration t:
/// s_t = e_lmo(H mu_t), gap g_t = grad'(mu_t - s_t), step 2/(t+2) or exact
/// line search, stop once g_t <= gap_tol or the budget is exhausted. The gap
/// of the last iterate is always recorded, so gaps aligns with iterates.
FwTrace solve(const SimplexQp& qp, const FwConfig& config);

/// Same, from an arbitrary start (used by the hand-iteration checks).
FwTrace solve_from(const SimplexQp& qp, const FwConfig& config,
                   const SimplexPoint& start);

struct MinimizeResult {
  SimplexPoint state;
  double objective = 0.0;
  double gap = 0.0;  // duality gap at the final iterate
  int iterations = 0;
  Stop stopped_by = Stop::kIterations;
};

/// Iteration identical to solve() but without the recorded trace, with the
/// gradient maintained incrementally (O(n) per iteration instead of O(n^2)),
/// so budgets in the millions stay cheap. Suited to driving the exact
/// line-search variant to tight tolerances.
MinimizeResult minimize(const SimplexQp& qp, const FwConfig& config);

inline FwTrace solve(const DualProblem& p, const FwConfig& c) {
  return solve(p.qp(), c);
}

const char* stop_name(Stop s);

}  // namespace svmflow::fw
