#pragma once

#include <Eigen/Dense>
#include <string>

#include "core/dataset.hpp"

namespace svmflow {

enum class KernelFamily { kLinear, kPolynomial, kGaussian };

/// A Mercer kernel. Only the parameters of the selected family are read:
/// degree/offset for polynomial, gamma for gaussian.
struct KernelSpec {
  KernelFamily family = KernelFamily::kPolynomial;
  int degree = 3;
  double offset = 1.0;
  double gamma = 1.0;

  static KernelSpec linear();
  static KernelSpec polynomial(int degree, double offset = 1.0);
  static KernelSpec gaussian(double gamma);

  /// degree >= 1 for polynomial, gamma > 0 for gaussian.
  void validate() const;
  std::string family_name() const;
};

/// k(a, b): linear -> <a,b>; polynomial -> (<a,b> + offset)^degree;
/// gaussian -> exp(-gamma * |a - b|^2).
double kernel_eval(const KernelSpec& spec,
                   const Eigen::Ref<const Eigen::VectorXd>& a,
                   const Eigen::Ref<const Eigen::VectorXd>& b);

/// n x n matrix with entries k(x_i, x_j), each unordered pair evaluated once
/// so the result is symmetric to the last bit.
Eigen::MatrixXd kernel_matrix(const KernelSpec& spec, const Dataset& data);

/// n-vector with entries k(x, x_i) against every training point.
Eigen::VectorXd kernel_vector(const KernelSpec& spec, const Dataset& data,
                              const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace svmflow
