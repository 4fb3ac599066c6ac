#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dual.hpp"

namespace svmflow::oracle {

/// Exact minimizer of a small simplex QP together with its KKT certificate:
/// on the active support (H mu)_i equals the equality multiplier; off it
/// mu_i = 0 and (H mu)_i >= multiplier (within tolerance).
struct OracleSolution {
  Eigen::VectorXd minimizer;   // mu*
  double optimal_value = 0.0;  // f(mu*)
  std::vector<Eigen::Index> active_support;
  double multiplier = 0.0;     // lambda for the sum-to-one constraint
};

inline constexpr Eigen::Index kMaxOracleSize = 12;
inline constexpr double kKktSlack = 1e-10;

/// Enumerates every nonempty candidate support S, solves the equality-
/// constrained KKT system
///   [ H_SS  -1 ] [mu_S  ]   [0]
///   [ 1'     0 ] [lambda] = [1]
/// and accepts the unique S whose solution is strictly positive on S and
/// dual-feasible off S. Exact up to linear-solve precision; requires
/// n <= kMaxOracleSize since all 2^n - 1 subsets are visited.
OracleSolution solve_exact(const SimplexQp& qp);

inline OracleSolution solve_exact(const DualProblem& p) {
  return solve_exact(p.qp());
}

}  // namespace svmflow::oracle
