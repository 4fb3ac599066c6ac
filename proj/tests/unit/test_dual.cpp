#include <random>

#include "core/dual.hpp"
#include "core/errors.hpp"
#include "doctest.h"
#include "support/test_support.hpp"

using namespace svmflow;

namespace {

Dataset axis_pair() {
  Eigen::MatrixXd points(2, 2);
  points << 1.0, 0.0,
            0.0, 1.0;
  Eigen::VectorXi labels(2);
  labels << 1, -1;
  return Dataset(points, labels);
}

// Independent construction of the dual matrix straight from its definition,
// with its own inner-product code.
Eigen::MatrixXd reference_hessian(const Dataset& data, const KernelSpec& spec,
                                  double c) {
  const Eigen::Index n = data.size();
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double dot = 0.0;
      for (Eigen::Index r = 0; r < data.dim(); ++r) {
        dot += data.points()(r, i) * data.points()(r, j);
      }
      double k = 0.0;
      switch (spec.family) {
        case KernelFamily::kLinear:
          k = dot;
          break;
        case KernelFamily::kPolynomial: {
          k = 1.0;
          for (int d = 0; d < spec.degree; ++d) k *= dot + spec.offset;
          break;
        }
        case KernelFamily::kGaussian: {
          double dist2 = 0.0;
          for (Eigen::Index r = 0; r < data.dim(); ++r) {
            const double diff = data.points()(r, i) - data.points()(r, j);
            dist2 += diff * diff;
          }
          k = std::exp(-spec.gamma * dist2);
          break;
        }
      }
      const double yy = data.label(i) * data.label(j);
      h(i, j) = k * yy + yy + (i == j ? 1.0 / c : 0.0);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("dual build: axis pair with a linear kernel") {
  const DualProblem p(axis_pair(), KernelSpec::linear(), 1.0);
  Eigen::MatrixXd expected(2, 2);
  expected << 3.0, -1.0,
             -1.0, 3.0;
  CHECK((p.hessian().array() == expected.array()).all());
}

TEST_CASE("dual build: huge C inflates the diagonal by almost nothing") {
  const DualProblem p(axis_pair(), KernelSpec::linear(), 1e12);
  Eigen::MatrixXd expected(2, 2);
  expected << 2.0 + 1e-12, -1.0,
             -1.0, 2.0 + 1e-12;
  CHECK((p.hessian().array() == expected.array()).all());
}

TEST_CASE("dual build: single sample") {
  Eigen::MatrixXd one(1, 1);
  one << 1.0;
  const Dataset single(one, Eigen::VectorXi::Ones(1));
  const DualProblem p(single, KernelSpec::linear(), 1.0);
  REQUIRE(p.size() == 1);
  CHECK(p.hessian()(0, 0) == 3.0);
}

TEST_CASE("dual build: matches an independent construction") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_instance(rng);
    const DualProblem p(inst.data, inst.kernel, inst.regularization);
    const Eigen::MatrixXd ref =
        reference_hessian(inst.data, inst.kernel, inst.regularization);
    CHECK((p.hessian() - ref).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("dual build: rejects nonpositive C") {
  CHECK_THROWS_AS(DualProblem(axis_pair(), KernelSpec::linear(), 0.0),
                  InvalidArgument);
  CHECK_THROWS_AS(DualProblem(axis_pair(), KernelSpec::linear(), -1.0),
                  InvalidArgument);
}

TEST_CASE("objective: frozen values") {
  const DualProblem p(axis_pair(), KernelSpec::linear(), 1.0);
  const Eigen::Vector2d half(0.5, 0.5);
  CHECK(p.objective(half) == 0.5);

  SimplexQp identity(Eigen::MatrixXd::Identity(4, 4));
  CHECK(identity.objective(Eigen::VectorXd::Constant(4, 0.25)) == 0.125);
  SimplexQp identity5(Eigen::MatrixXd::Identity(5, 5));
  CHECK(identity5.objective(Eigen::VectorXd::Constant(5, 0.2)) ==
        doctest::Approx(0.1).epsilon(1e-15));

  const Eigen::Vector2d vertex(1.0, 0.0);
  CHECK(p.objective(vertex) == 0.5 * p.hessian()(0, 0));
}

TEST_CASE("gradient: frozen values and identity") {
  const DualProblem p(axis_pair(), KernelSpec::linear(), 1.0);
  const Eigen::VectorXd g = p.gradient(Eigen::Vector2d(0.5, 0.5));
  CHECK(g[0] == 1.0);
  CHECK(g[1] == 1.0);

  SimplexQp identity(Eigen::MatrixXd::Identity(3, 3));
  const Eigen::Vector3d mu(0.2, 0.3, 0.5);
  CHECK((identity.gradient(mu).array() == mu.array()).all());
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_instance(rng, 3, 20);
    const DualProblem p(inst.data, inst.kernel, inst.regularization);
    const Eigen::VectorXd mu = testing::random_simplex(rng, p.size());
    const Eigen::VectorXd analytic = p.gradient(mu);
    const Eigen::VectorXd numeric =
        testing::finite_difference_gradient(p.qp(), mu);
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      CHECK(std::abs(numeric[i] - analytic[i]) <=
            1e-6 * std::max(1.0, std::abs(analytic[i])));
    }
  }
}

TEST_CASE("hessian is positive definite with smallest eigenvalue >= 1/C") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_instance(rng);
    const DualProblem p(inst.data, inst.kernel, inst.regularization);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.hessian());
    CHECK(es.eigenvalues().minCoeff() >=
          1.0 / inst.regularization - 1e-10);
  }
}

TEST_CASE("simplex point validation") {
  CHECK_THROWS_AS(SimplexPoint(Eigen::Vector2d(0.6, 0.6)), InvalidArgument);
  CHECK_THROWS_AS(SimplexPoint(Eigen::Vector2d(1.5, -0.5)), InvalidArgument);
  const SimplexPoint uniform = SimplexPoint::uniform(4);
  CHECK(uniform.coords().sum() == 1.0);
}

TEST_CASE("extract_model: symmetric pair") {
  const DualProblem p(axis_pair(), KernelSpec::linear(), 1.0);
  const TrainedModel model =
      extract_model(p, SimplexPoint(Eigen::Vector2d(0.5, 0.5)), 0.0);
  CHECK(model.theta == 0.0);
  REQUIRE(model.support_count() == 2);
  CHECK(model.coefficients[0] == 0.5);
  CHECK(model.coefficients[1] == -0.5);
  CHECK(model.support_indices == std::vector<Eigen::Index>{0, 1});
}

TEST_CASE("extract_model: vertex keeps a single support vector") {
  Eigen::MatrixXd points(2, 3);
  points << 1.0, 0.0, 0.5,
            0.0, 1.0, 0.5;
  Eigen::VectorXi labels(3);
  labels << 1, -1, 1;
  const DualProblem p(Dataset(points, labels), KernelSpec::linear(), 1.0);
  Eigen::Vector3d vertex(1.0, 0.0, 0.0);
  const TrainedModel model = extract_model(p, SimplexPoint(vertex), 1e-5);
  REQUIRE(model.support_count() == 1);
  CHECK(model.support_indices[0] == 0);
  CHECK(model.coefficients[0] == 1.0);
}

TEST_CASE("extract_model: tau too large is an error") {
  const DualProblem p(axis_pair(), KernelSpec::linear(), 1.0);
  CHECK_THROWS_WITH_AS(
      extract_model(p, SimplexPoint(Eigen::Vector2d(0.5, 0.5)), 0.6),
      doctest::Contains("empty support"), InvalidArgument);
}

TEST_CASE("extract_model: truncated multipliers are renormalized") {
  Eigen::MatrixXd points(2, 3);
  points << 1.0, 0.0, 0.5,
            0.0, 1.0, 0.5;
  Eigen::VectorXi labels(3);
  labels << 1, -1, 1;
  const DualProblem p(Dataset(points, labels), KernelSpec::linear(), 1.0);
  const SimplexPoint mu(Eigen::Vector3d(0.6, 0.4 - 1e-7, 1e-7));
  const TrainedModel model = extract_model(p, mu, 1e-5);
  REQUIRE(model.support_count() == 2);
  const double mass = 0.6 + (0.4 - 1e-7);
  CHECK(model.coefficients[0] == doctest::Approx(0.6 / mass).epsilon(1e-15));
  CHECK(model.coefficients[1] ==
        doctest::Approx(-(0.4 - 1e-7) / mass).epsilon(1e-15));
  CHECK(model.theta ==
        doctest::Approx(-(0.6 - (0.4 - 1e-7)) / mass).epsilon(1e-12));
}

TEST_CASE("simplex qp: requires symmetry") {
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 2.0,
          0.0, 1.0;
  CHECK_THROWS_AS(SimplexQp(asym), InvalidArgument);
}
