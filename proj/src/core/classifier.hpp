#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dataset.hpp"
#include "core/dual.hpp"

namespace svmflow {

/// Raw decision value sum_s c_s (k(x, x_s) + 1).
double decision_value(const TrainedModel& model,
                      const Eigen::Ref<const Eigen::VectorXd>& x);

/// sign with the 0 -> +1 convention.
inline int predicted_label(double value) { return value >= 0.0 ? 1 : -1; }

struct Prediction {
  std::vector<int> labels;
  std::vector<double> values;
  double accuracy = 0.0;  // fraction of labels matching the dataset's
};

Prediction predict(const TrainedModel& model, const Dataset& data);

/// Decision values on a regular lattice over a 2-D box, for contouring at
/// level zero. values(iy, ix) is the decision at
/// (xmin + ix*dx, ymin + iy*dy); both axes include their endpoints.
struct DecisionGrid {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  int resolution = 0;
  Eigen::MatrixXd values;

  double x_at(int ix) const {
    return xmin + (xmax - xmin) * ix / (resolution - 1);
  }
  double y_at(int iy) const {
    return ymin + (ymax - ymin) * iy / (resolution - 1);
  }
};

/// Requires a 2-D model, resolution >= 2 and a non-degenerate box.
DecisionGrid decision_grid(const TrainedModel& model, double xmin, double xmax,
                           double ymin, double ymax, int resolution);

}  // namespace svmflow
