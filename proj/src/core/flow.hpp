#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dual.hpp"

namespace svmflow::flow {

enum class Method { kRk4Fixed, kRk45Adaptive };
enum class Termination { kEquilibrium, kHorizon };

struct FlowConfig {
  double t_end = 50.0;
  Method method = Method::kRk45Adaptive;
  double dt = 1e-2;        // fixed-step size (kRk4Fixed)
  double tol_step = 1e-8;  // local error tolerance (kRk45Adaptive)
  double stop_tol = 1e-8;  // equilibrium threshold on the sup norm of mu_dot
  double floor = 1e-12;    // positivity safeguard
  int record_every = 1;    // trajectory thinning

  void validate(Eigen::Index n) const;
};

struct Trajectory {
  std::vector<double> times;  // strictly increasing, starts at 0
  std::vector<SimplexPoint> states;
  std::vector<double> objective_values;
  Termination terminated_by = Termination::kHorizon;
  long accepted_steps = 0;

  const SimplexPoint& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

/// Right-hand side of the simplex flow,
///   mu_dot = -[diag(mu) - mu mu'] H mu,
/// evaluated in the equivalent componentwise form
///   mu_dot_i = mu_i (mu' H mu - (H mu)_i).
/// The field points into the simplex along its boundary and conserves the
/// coordinate sum whenever the input sums to one.
Eigen::VectorXd rhs(const SimplexQp& qp, const Eigen::Ref<const Eigen::VectorXd>& mu);

/// One classical 4th-order Runge-Kutta step of the flow. No safeguard is
/// applied; the exact field conserves the coordinate sum, so the output sum
/// stays within 1e-12 of one for moderate steps.
Eigen::VectorXd rk4_step(const SimplexQp& qp,
                         const Eigen::Ref<const Eigen::VectorXd>& mu, double dt);

/// Integrates from the uniform point until equilibrium (sup norm of the
/// field below stop_tol) or the horizon t_end. After every accepted step the
/// positivity safeguard clamps entries below `floor` up to it and
/// renormalizes the sum to one. Throws NumericalError on non-finite states.
Trajectory integrate(const SimplexQp& qp, const FlowConfig& config);

/// Same, from an arbitrary interior start (used by the oracle comparisons).
Trajectory integrate_from(const SimplexQp& qp, const FlowConfig& config,
                          const SimplexPoint& start);

inline Trajectory integrate(const DualProblem& p, const FlowConfig& c) {
  return integrate(p.qp(), c);
}

const char* termination_name(Termination t);

}  // namespace svmflow::flow
