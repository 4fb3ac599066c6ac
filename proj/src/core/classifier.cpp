#include "core/classifier.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/kernel.hpp"

namespace svmflow {

double decision_value(const TrainedModel& model,
                      const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != model.dim()) {
    throw InvalidArgument("decision_value: dimension mismatch");
  }
  double value = 0.0;
  for (Eigen::Index s = 0; s < model.support_count(); ++s) {
    value += model.coefficients[s] *
             (kernel_eval(model.kernel, x, model.support_points.col(s)) + 1.0);
  }
  return value;
}

Prediction predict(const TrainedModel& model, const Dataset& data) {
  if (data.dim() != model.dim()) {
    throw InvalidArgument("predict: dimension mismatch");
  }
  Prediction out;
  out.labels.reserve(data.size());
  out.values.reserve(data.size());
  Eigen::Index hits = 0;
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    const double value = decision_value(model, data.points().col(i));
    const int label = predicted_label(value);
    out.values.push_back(value);
    out.labels.push_back(label);
    if (label == data.label(i)) ++hits;
  }
  out.accuracy = static_cast<double>(hits) / static_cast<double>(data.size());
  return out;
}

DecisionGrid decision_grid(const TrainedModel& model, double xmin, double xmax,
                           double ymin, double ymax, int resolution) {
  if (model.dim() != 2) {
    throw InvalidArgument("decision_grid: model must be 2-D");
  }
  if (resolution < 2) {
    throw InvalidArgument("decision_grid: resolution must be >= 2");
  }
  if (!(xmin < xmax) || !(ymin < ymax)) {
    throw InvalidArgument("decision_grid: degenerate box");
  }

  DecisionGrid grid;
  grid.xmin = xmin;
  grid.xmax = xmax;
  grid.ymin = ymin;
  grid.ymax = ymax;
  grid.resolution = resolution;
  grid.values.resize(resolution, resolution);

  Eigen::Vector2d point;
  for (int iy = 0; iy < resolution; ++iy) {
    point[1] = grid.y_at(iy);
    for (int ix = 0; ix < resolution; ++ix) {
      point[0] = grid.x_at(ix);
      grid.values(iy, ix) = decision_value(model, point);
    }
  }
  if (!grid.values.allFinite()) {
    throw NumericalError("decision_grid: non-finite decision value");
  }
  return grid;
}

}  // namespace svmflow
