#include "core/frank_wolfe.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace svmflow::fw {

void FwConfig::validate() const {
  if (max_iters < 1) throw InvalidArgument("fw: max_iters must be >= 1");
  if (!(gap_tol >= 0.0) || !std::isfinite(gap_tol)) {
    throw InvalidArgument("fw: gap_tol must be finite and >= 0");
  }
}

Eigen::Index lmo_simplex(const Eigen::Ref<const Eigen::VectorXd>& grad) {
  if (grad.size() < 1) throw InvalidArgument("lmo: empty gradient");
  if (!grad.allFinite()) throw InvalidArgument("lmo: non-finite gradient");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < grad.size(); ++i) {
    if (grad[i] < grad[best]) best = i;  // strict: ties keep the lowest index
  }
  return best;
}

FwTrace solve_from(const SimplexQp& qp, const FwConfig& config,
                   const SimplexPoint& start) {
  config.validate();
  if (start.size() != qp.size()) {
    throw InvalidArgument("fw: start dimension mismatch");
  }

  FwTrace trace;
  Eigen::VectorXd mu = start.coords();
  trace.iterates.emplace_back(mu);
  trace.objective_values.push_back(qp.objective(mu));

  for (int t = 0; t < config.max_iters; ++t) {
    const Eigen::VectorXd grad = qp.gradient(mu);
    const Eigen::Index vertex = lmo_simplex(grad);
    const double gap = grad.dot(mu) - grad[vertex];
    trace.gaps.push_back(gap);
    if (gap <= config.gap_tol) {
      trace.stopped_by = Stop::kGap;
      return trace;
    }

    double step;
    if (config.step_rule == StepRule::kStandard) {
      step = 2.0 / static_cast<double>(t + 2);
    } else {
      // Exact minimizer of the quadratic along mu -> vertex, clipped to [0,1].
      Eigen::VectorXd direction = mu;
      direction[vertex] -= 1.0;
      const double curvature = direction.dot(qp.hessian() * direction);
      step = curvature > 0.0 ? std::clamp(gap / curvature, 0.0, 1.0) : 1.0;
    }

    mu *= (1.0 - step);
    mu[vertex] += step;
    trace.iterates.emplace_back(mu);
    trace.objective_values.push_back(qp.objective(mu));
  }

  // Budget exhausted; record the gap of the final iterate as well.
  const Eigen::VectorXd grad = qp.gradient(mu);
  trace.gaps.push_back(grad.dot(mu) - grad[lmo_simplex(grad)]);
  trace.stopped_by = Stop::kIterations;
  return trace;
}

FwTrace solve(const SimplexQp& qp, const FwConfig& config) {
  return solve_from(qp, config, SimplexPoint::uniform(qp.size()));
}

MinimizeResult minimize(const SimplexQp& qp, const FwConfig& config) {
  config.validate();
  const Eigen::MatrixXd& h = qp.hessian();
  const Eigen::Index n = qp.size();

  Eigen::VectorXd mu = SimplexPoint::uniform(n).coords();
  Eigen::VectorXd grad = h * mu;

  for (int t = 0; t < config.max_iters; ++t) {
    const Eigen::Index vertex = lmo_simplex(grad);
    const double gap = grad.dot(mu) - grad[vertex];
    if (gap <= config.gap_tol) {
      return MinimizeResult{SimplexPoint(mu), qp.objective(mu), gap, t,
                            Stop::kGap};
    }

    double step;
    if (config.step_rule == StepRule::kStandard) {
      step = 2.0 / static_cast<double>(t + 2);
    } else {
      // d = mu - e_vertex, so d'Hd = mu'g - 2 g_vertex + H_vv.
      const double curvature =
          grad.dot(mu) - 2.0 * grad[vertex] + h(vertex, vertex);
      step = curvature > 0.0 ? std::clamp(gap / curvature, 0.0, 1.0) : 1.0;
    }

    mu *= (1.0 - step);
    mu[vertex] += step;
    grad *= (1.0 - step);
    grad += step * h.col(vertex);
    // Shed accumulated rounding: tiny line-search steps stop contracting the
    // coordinate-sum error, so reset it (and the gradient) periodically.
    if ((t & 0xffff) == 0xffff) {
      mu /= mu.sum();
      grad = h * mu;
    }
  }

  grad = h * mu;
  const double gap = grad.dot(mu) - grad[lmo_simplex(grad)];
  return MinimizeResult{SimplexPoint(mu), qp.objective(mu), gap,
                        config.max_iters, Stop::kIterations};
}

const char* stop_name(Stop s) {
  return s == Stop::kGap ? "gap" : "iterations";
}

}  // namespace svmflow::fw
