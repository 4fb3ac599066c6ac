#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dataset.hpp"
#include "core/kernel.hpp"

namespace svmflow {

/// A point of the standard simplex: nonnegative entries summing to one
/// (within kSumTol). Construction validates.
class SimplexPoint {
 public:
  static constexpr double kSumTol = 1e-9;

  static SimplexPoint uniform(Eigen::Index n);
  explicit SimplexPoint(Eigen::VectorXd coords);

  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }
  double operator[](Eigen::Index i) const { return coords_[i]; }

 private:
  Eigen::VectorXd coords_;
};

/// Minimization of f(mu) = 1/2 mu' H mu over the standard simplex, for a
/// symmetric positive-definite H. The solvers and the oracle operate on this
/// form; DualProblem below carries the SVM-specific construction of H.
class SimplexQp {
 public:
  explicit SimplexQp(Eigen::MatrixXd hessian);

  Eigen::Index size() const { return hessian_.cols(); }
  const Eigen::MatrixXd& hessian() const { return hessian_; }

  double objective(const Eigen::Ref<const Eigen::VectorXd>& mu) const;
  Eigen::VectorXd gradient(const Eigen::Ref<const Eigen::VectorXd>& mu) const;

 private:
  Eigen::MatrixXd hessian_;
};

/// Dual of margin training with squared slack penalties:
///   H_ij = (K_ij + 1) y_i y_j + (1/C) delta_ij,
/// minimized over the simplex. H - (1/C) I is a sum of two PSD Gram-type
/// terms, so H is positive definite with smallest eigenvalue >= 1/C.
class DualProblem {
 public:
  DualProblem(Dataset data, KernelSpec kernel, double regularization);

  Eigen::Index size() const { return qp_.size(); }
  const SimplexQp& qp() const { return qp_; }
  const Eigen::MatrixXd& hessian() const { return qp_.hessian(); }
  double regularization() const { return regularization_; }
  const Dataset& data() const { return data_; }
  const KernelSpec& kernel() const { return kernel_; }

  double objective(const Eigen::Ref<const Eigen::VectorXd>& mu) const {
    return qp_.objective(mu);
  }
  double objective(const SimplexPoint& mu) const {
    return qp_.objective(mu.coords());
  }
  Eigen::VectorXd gradient(const Eigen::Ref<const Eigen::VectorXd>& mu) const {
    return qp_.gradient(mu);
  }
  Eigen::VectorXd gradient(const SimplexPoint& mu) const {
    return qp_.gradient(mu.coords());
  }

 private:
  Dataset data_;
  KernelSpec kernel_;
  double regularization_;
  SimplexQp qp_;
};

/// Everything needed to evaluate the classifier
///   decision(x) = sum_s c_s (k(x, x_s) + 1),  label = sign(decision),
/// where c_s = y_s mu_s over the retained support set.
struct TrainedModel {
  KernelSpec kernel;
  Eigen::MatrixXd support_points;          // one column per support vector
  Eigen::VectorXd coefficients;            // y_s * mu_s
  double theta = 0.0;                      // bias, -sum_i y_i mu_i
  std::vector<Eigen::Index> support_indices;  // positions in the training set

  Eigen::Index dim() const { return support_points.rows(); }
  Eigen::Index support_count() const { return support_points.cols(); }
};

/// Keeps the entries with mu_i > tau. For tau > 0 the kept entries are
/// renormalized to sum one before theta and the coefficients are computed,
/// so the truncated model is self-consistent; tau = 0 keeps the multipliers
/// exactly as given. Throws InvalidArgument when no entry survives.
TrainedModel extract_model(const DualProblem& problem, const SimplexPoint& mu,
                           double tau);

}  // namespace svmflow
