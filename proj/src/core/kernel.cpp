#include "core/kernel.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace svmflow {

KernelSpec KernelSpec::linear() {
  KernelSpec spec;
  spec.family = KernelFamily::kLinear;
  return spec;
}

KernelSpec KernelSpec::polynomial(int degree, double offset) {
  KernelSpec spec;
  spec.family = KernelFamily::kPolynomial;
  spec.degree = degree;
  spec.offset = offset;
  spec.validate();
  return spec;
}

KernelSpec KernelSpec::gaussian(double gamma) {
  KernelSpec spec;
  spec.family = KernelFamily::kGaussian;
  spec.gamma = gamma;
  spec.validate();
  return spec;
}

void KernelSpec::validate() const {
  switch (family) {
    case KernelFamily::kLinear:
      return;
    case KernelFamily::kPolynomial:
      if (degree < 1) throw InvalidArgument("kernel: degree must be >= 1");
      if (!std::isfinite(offset)) throw InvalidArgument("kernel: offset must be finite");
      return;
    case KernelFamily::kGaussian:
      if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw InvalidArgument("kernel: gamma must be finite and > 0");
      }
      return;
  }
  throw InvalidArgument("kernel: unknown family");
}

std::string KernelSpec::family_name() const {
  switch (family) {
    case KernelFamily::kLinear: return "linear";
    case KernelFamily::kPolynomial: return "polynomial";
    case KernelFamily::kGaussian: return "gaussian";
  }
  return "unknown";
}

namespace {

// Integer power by repeated multiplication; keeps small-degree cases exact.
double ipow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

double kernel_eval(const KernelSpec& spec,
                   const Eigen::Ref<const Eigen::VectorXd>& a,
                   const Eigen::Ref<const Eigen::VectorXd>& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("kernel: dimension mismatch");
  }
  switch (spec.family) {
    case KernelFamily::kLinear:
      return a.dot(b);
    case KernelFamily::kPolynomial:
      return ipow(a.dot(b) + spec.offset, spec.degree);
    case KernelFamily::kGaussian:
      return std::exp(-spec.gamma * (a - b).squaredNorm());
  }
  throw InvalidArgument("kernel: unknown family");
}

Eigen::MatrixXd kernel_matrix(const KernelSpec& spec, const Dataset& data) {
  spec.validate();
  const Eigen::Index n = data.size();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double value =
          kernel_eval(spec, data.points().col(i), data.points().col(j));
      k(i, j) = value;
      k(j, i) = value;
    }
  }
  return k;
}

Eigen::VectorXd kernel_vector(const KernelSpec& spec, const Dataset& data,
                              const Eigen::Ref<const Eigen::VectorXd>& x) {
  spec.validate();
  if (x.size() != data.dim()) {
    throw InvalidArgument("kernel: query dimension mismatch");
  }
  const Eigen::Index n = data.size();
  Eigen::VectorXd k(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k[i] = kernel_eval(spec, data.points().col(i), x);
  }
  return k;
}

}  // namespace svmflow
