#pragma once

#include <string>

#include "core/dataset.hpp"
#include "core/dual.hpp"
#include "core/flow.hpp"
#include "core/frank_wolfe.hpp"
#include "core/model_io.hpp"

namespace svmflow {

enum class SolverKind { kFlow, kFrankWolfe };

struct TrainOptions {
  SolverKind solver = SolverKind::kFlow;
  KernelSpec kernel;              // polynomial degree 3, offset 1
  double regularization = 10.0;   // C
  double sparsity_threshold = 1e-5;
  flow::FlowConfig flow;
  fw::FwConfig frank_wolfe;
  std::string trace_csv_path;     // empty: no trace written
};

struct TrainResult {
  TrainedModel model;
  TrainingInfo info;
};

/// Builds the dual problem, runs the selected solver from the uniform point,
/// optionally writes the trajectory/iterate trace, and extracts the
/// truncated model.
TrainResult train(const Dataset& data, const TrainOptions& options);

}  // namespace svmflow
