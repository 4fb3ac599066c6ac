#pragma once

#include <string>

#include "core/classifier.hpp"
#include "core/dual.hpp"
#include "core/flow.hpp"
#include "core/frank_wolfe.hpp"

namespace svmflow {

/// How a model was obtained; stored alongside it in the model file.
struct TrainingInfo {
  std::string solver;       // "flow" or "frank_wolfe"
  double regularization = 0.0;
  double final_objective = 0.0;
  std::string termination;  // equilibrium | horizon | gap | iterations
  double end_time = 0.0;    // flow: time reached; frank_wolfe: iterations
  long steps = 0;           // accepted steps or iterations
  double solve_seconds = 0.0;
};

inline constexpr int kModelFormatVersion = 1;

/// Versioned JSON model file. Doubles survive a save/load round-trip
/// bit-exactly, and load followed by save reproduces the file verbatim.
void save_model(const TrainedModel& model, const TrainingInfo& info,
                const std::string& path);

struct LoadedModel {
  TrainedModel model;
  TrainingInfo info;
};

LoadedModel load_model(const std::string& path);

/// Trajectory export: header `t,f,mu_1,...,mu_n`, one row per recorded step.
void write_trajectory_csv(const flow::Trajectory& traj, const std::string& path);

/// Iterate export: header `t,f,gap,mu_1,...,mu_n`, one row per iterate.
void write_fw_trace_csv(const fw::FwTrace& trace, const std::string& path);

/// Grid export: header `x,y,value`, row-major lattice order (y rows, x
/// fastest).
void write_grid_csv(const DecisionGrid& grid, const std::string& path);

/// Prediction export: header `predicted_label,decision_value`.
void write_predictions_csv(const Prediction& prediction, const std::string& path);

}  // namespace svmflow
