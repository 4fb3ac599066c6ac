#include "core/dual.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace svmflow {

SimplexPoint SimplexPoint::uniform(Eigen::Index n) {
  if (n < 1) throw InvalidArgument("simplex point: need n >= 1");
  return SimplexPoint(Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
}

SimplexPoint::SimplexPoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1) throw InvalidArgument("simplex point: empty");
  if (!coords_.allFinite()) throw InvalidArgument("simplex point: non-finite entry");
  if ((coords_.array() < 0.0).any()) {
    throw InvalidArgument("simplex point: negative entry");
  }
  if (std::abs(coords_.sum() - 1.0) > kSumTol) {
    throw InvalidArgument("simplex point: entries must sum to 1");
  }
}

SimplexQp::SimplexQp(Eigen::MatrixXd hessian) : hessian_(std::move(hessian)) {
  if (hessian_.rows() != hessian_.cols() || hessian_.rows() < 1) {
    throw InvalidArgument("simplex qp: matrix must be square and non-empty");
  }
  if (!hessian_.allFinite()) {
    throw InvalidArgument("simplex qp: non-finite matrix entry");
  }
  const double scale = std::max(1.0, hessian_.cwiseAbs().maxCoeff());
  if ((hessian_ - hessian_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("simplex qp: matrix must be symmetric");
  }
}

double SimplexQp::objective(const Eigen::Ref<const Eigen::VectorXd>& mu) const {
  if (mu.size() != size()) throw InvalidArgument("objective: dimension mismatch");
  return 0.5 * mu.dot(hessian_ * mu);
}

Eigen::VectorXd SimplexQp::gradient(
    const Eigen::Ref<const Eigen::VectorXd>& mu) const {
  if (mu.size() != size()) throw InvalidArgument("gradient: dimension mismatch");
  return hessian_ * mu;
}

namespace {

Eigen::MatrixXd build_hessian(const Dataset& data, const KernelSpec& kernel,
                              double regularization) {
  if (!(regularization > 0.0) || !std::isfinite(regularization)) {
    throw InvalidArgument("dual: regularization C must be finite and > 0");
  }
  const Eigen::MatrixXd k = kernel_matrix(kernel, data);
  const Eigen::Index n = data.size();
  const double ridge = 1.0 / regularization;
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double yy = static_cast<double>(data.label(i) * data.label(j));
      h(i, j) = (k(i, j) + 1.0) * yy + (i == j ? ridge : 0.0);
    }
  }
  return h;
}

}  // namespace

DualProblem::DualProblem(Dataset data, KernelSpec kernel, double regularization)
    : data_(std::move(data)),
      kernel_(kernel),
      regularization_(regularization),
      qp_(build_hessian(data_, kernel_, regularization)) {}

TrainedModel extract_model(const DualProblem& problem, const SimplexPoint& mu,
                           double tau) {
  if (mu.size() != problem.size()) {
    throw InvalidArgument("extract_model: dimension mismatch");
  }
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw InvalidArgument("extract_model: tau must be finite and >= 0");
  }

  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (mu[i] > tau) support.push_back(i);
  }
  if (support.empty()) {
    throw InvalidArgument("extract_model: empty support set (tau too large)");
  }

  double mass = 0.0;
  for (const Eigen::Index i : support) mass += mu[i];
  const double scale = tau > 0.0 ? 1.0 / mass : 1.0;

  const Dataset& data = problem.data();
  TrainedModel model;
  model.kernel = problem.kernel();
  model.support_points.resize(data.dim(), static_cast<Eigen::Index>(support.size()));
  model.coefficients.resize(static_cast<Eigen::Index>(support.size()));
  model.support_indices = support;

  double theta = 0.0;
  for (std::size_t s = 0; s < support.size(); ++s) {
    const Eigen::Index i = support[s];
    const double weight = mu[i] * scale;
    model.support_points.col(static_cast<Eigen::Index>(s)) = data.points().col(i);
    model.coefficients[static_cast<Eigen::Index>(s)] = data.label(i) * weight;
    theta -= data.label(i) * weight;
  }
  model.theta = theta;
  return model;
}

}  // namespace svmflow
