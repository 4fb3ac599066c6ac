#include "core/oracle.hpp"

#include "core/errors.hpp"

namespace svmflow::oracle {

OracleSolution solve_exact(const SimplexQp& qp) {
  const Eigen::Index n = qp.size();
  if (n > kMaxOracleSize) {
    throw InvalidArgument("oracle: support enumeration capped at n <= 12");
  }

  const Eigen::MatrixXd& h = qp.hessian();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    const Eigen::Index s = static_cast<Eigen::Index>(support.size());

    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
    for (Eigen::Index a = 0; a < s; ++a) {
      for (Eigen::Index b = 0; b < s; ++b) kkt(a, b) = h(support[a], support[b]);
      kkt(a, s) = -1.0;
      kkt(s, a) = 1.0;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
    rhs[s] = 1.0;

    const Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) continue;  // degenerate subsystem, skip
    const Eigen::VectorXd solution = lu.solve(rhs);

    bool positive = true;
    for (Eigen::Index a = 0; a < s; ++a) {
      if (!(solution[a] > 0.0)) {
        positive = false;
        break;
      }
    }
    if (!positive) continue;

    Eigen::VectorXd mu = Eigen::VectorXd::Zero(n);
    for (Eigen::Index a = 0; a < s; ++a) mu[support[a]] = solution[a];
    const double lambda = solution[s];

    const Eigen::VectorXd grad = h * mu;
    bool dual_feasible = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mu[i] == 0.0 && grad[i] < lambda - kKktSlack) {
        dual_feasible = false;
        break;
      }
    }
    if (!dual_feasible) continue;

    OracleSolution out;
    out.minimizer = std::move(mu);
    out.optimal_value = qp.objective(out.minimizer);
    out.active_support = std::move(support);
    out.multiplier = lambda;
    return out;
  }
  throw NumericalError("oracle: no KKT-consistent support found");
}

}  // namespace svmflow::oracle
