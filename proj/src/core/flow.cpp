#include "core/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace svmflow::flow {

void FlowConfig::validate(Eigen::Index n) const {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw InvalidArgument("flow: t_end must be finite and > 0");
  }
  if (method == Method::kRk4Fixed) {
    if (!(dt > 0.0) || !(dt < t_end)) {
      throw InvalidArgument("flow: need 0 < dt < t_end for the fixed-step method");
    }
  } else {
    if (!(tol_step > 0.0)) throw InvalidArgument("flow: tol_step must be > 0");
  }
  if (!(stop_tol > 0.0)) throw InvalidArgument("flow: stop_tol must be > 0");
  if (!(floor > 0.0) || floor >= 0.5 / static_cast<double>(n)) {
    throw InvalidArgument("flow: floor must be positive and well below 1/n");
  }
  if (record_every < 1) throw InvalidArgument("flow: record_every must be >= 1");
}

Eigen::VectorXd rhs(const SimplexQp& qp,
                    const Eigen::Ref<const Eigen::VectorXd>& mu) {
  const Eigen::VectorXd grad = qp.gradient(mu);
  const double quad = mu.dot(grad);
  return mu.array() * (quad - grad.array());
}

Eigen::VectorXd rk4_step(const SimplexQp& qp,
                         const Eigen::Ref<const Eigen::VectorXd>& mu,
                         double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("rk4_step: dt must be > 0");
  const Eigen::VectorXd k1 = rhs(qp, mu);
  const Eigen::VectorXd k2 = rhs(qp, mu + (0.5 * dt) * k1);
  const Eigen::VectorXd k3 = rhs(qp, mu + (0.5 * dt) * k2);
  const Eigen::VectorXd k4 = rhs(qp, mu + dt * k3);
  Eigen::VectorXd out = mu + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!out.allFinite()) {
    throw NumericalError("rk4_step: non-finite intermediate state");
  }
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
// 5th-order weights (also the last stage position, FSAL form).
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
// Error weights: 5th-order minus embedded 4th-order.
constexpr double kE1 = kB1 - 5179.0 / 57600.0;
constexpr double kE3 = kB3 - 7571.0 / 16695.0;
constexpr double kE4 = kB4 - 393.0 / 640.0;
constexpr double kE5 = kB5 + 92097.0 / 339200.0;
constexpr double kE6 = kB6 - 187.0 / 2100.0;
constexpr double kE7 = -1.0 / 40.0;

// Clamp below `floor_value`, then rescale so the entries sum to one.
Eigen::VectorXd safeguarded(Eigen::VectorXd mu, double floor_value,
                            double last_time) {
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (mu[i] < floor_value) mu[i] = floor_value;
  }
  const double total = mu.sum();
  if (!std::isfinite(total) || !(total > 0.0)) {
    throw NumericalError("flow: non-finite state after t = " +
                         std::to_string(last_time));
  }
  if (total != 1.0) {
    mu /= total;
    // Rescaling can pull a floored entry one ulp under; keep the floor exact.
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      if (mu[i] < floor_value) mu[i] = floor_value;
    }
  }
  return mu;
}

struct Recorder {
  const SimplexQp& qp;
  Trajectory& traj;
  void operator()(double t, const Eigen::VectorXd& state) const {
    traj.times.push_back(t);
    traj.states.emplace_back(state);
    traj.objective_values.push_back(qp.objective(state));
  }
};

}  // namespace

Trajectory integrate_from(const SimplexQp& qp, const FlowConfig& config,
                          const SimplexPoint& start) {
  config.validate(qp.size());
  if (start.size() != qp.size()) {
    throw InvalidArgument("flow: start dimension mismatch");
  }

  Trajectory traj;
  Recorder record{qp, traj};

  Eigen::VectorXd mu = start.coords();
  double t = 0.0;
  Eigen::VectorXd rate = rhs(qp, mu);

  record(0.0, mu);
  if (rate.lpNorm<Eigen::Infinity>() < config.stop_tol) {
    traj.terminated_by = Termination::kEquilibrium;
    return traj;
  }

  const double t_end = config.t_end;
  const bool adaptive = config.method == Method::kRk45Adaptive;
  double h = adaptive ? std::min(1e-2, 0.1 * t_end) : config.dt;
  const double tol = config.tol_step;

  Eigen::VectorXd k2, k3, k4, k5, k6, k7, candidate;
  while (true) {
    bool final_step = false;
    if (h >= t_end - t) {
      h = t_end - t;
      final_step = true;
    }

    double accepted_h = h;
    if (adaptive) {
      // One Dormand-Prince attempt; `rate` doubles as k1 (FSAL).
      const Eigen::VectorXd& k1 = rate;
      k2 = rhs(qp, mu + h * (kA21 * k1));
      k3 = rhs(qp, mu + h * (kA31 * k1 + kA32 * k2));
      k4 = rhs(qp, mu + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
      k5 = rhs(qp, mu + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
      k6 = rhs(qp, mu + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 +
                             kA65 * k5));
      candidate =
          mu + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
      k7 = rhs(qp, candidate);

      double err = 0.0;
      bool finite = candidate.allFinite();
      if (finite) {
        for (Eigen::Index i = 0; i < mu.size(); ++i) {
          const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] +
                                kE5 * k5[i] + kE6 * k6[i] + kE7 * k7[i]);
          const double scale =
              tol + tol * std::max(std::abs(mu[i]), std::abs(candidate[i]));
          err = std::max(err, std::abs(e) / scale);
        }
        finite = std::isfinite(err);
      }

      if (!finite || err > 1.0) {
        const double factor =
            finite ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9) : 0.2;
        h *= factor;
        if (h < 1e-14 * std::max(1.0, t)) {
          throw NumericalError(
              "flow: step size underflow; last valid state at t = " +
              std::to_string(t));
        }
        continue;
      }
      const double factor =
          err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
      h *= factor;
    } else {
      candidate = rk4_step(qp, mu, h);
      if (!candidate.allFinite()) {
        throw NumericalError("flow: non-finite state; last valid state at t = " +
                             std::to_string(t));
      }
    }

    t = final_step ? t_end : t + accepted_h;
    mu = safeguarded(std::move(candidate), config.floor, t);
    rate = rhs(qp, mu);
    ++traj.accepted_steps;

    const bool at_equilibrium = rate.lpNorm<Eigen::Infinity>() < config.stop_tol;
    const bool at_horizon = final_step;
    if (at_equilibrium || at_horizon ||
        traj.accepted_steps % config.record_every == 0) {
      record(t, mu);
    }
    if (at_equilibrium) {
      traj.terminated_by = Termination::kEquilibrium;
      break;
    }
    if (at_horizon) {
      traj.terminated_by = Termination::kHorizon;
      break;
    }
  }
  return traj;
}

Trajectory integrate(const SimplexQp& qp, const FlowConfig& config) {
  return integrate_from(qp, config, SimplexPoint::uniform(qp.size()));
}

const char* termination_name(Termination t) {
  return t == Termination::kEquilibrium ? "equilibrium" : "horizon";
}

}  // namespace svmflow::flow
