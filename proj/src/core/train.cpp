#include "core/train.hpp"

#include <chrono>

namespace svmflow {

TrainResult train(const Dataset& data, const TrainOptions& options) {
  data.require_two_classes();
  options.kernel.validate();

  const DualProblem problem(data, options.kernel, options.regularization);

  TrainResult result;
  TrainingInfo& info = result.info;
  info.regularization = options.regularization;

  const auto started = std::chrono::steady_clock::now();
  SimplexPoint solution = SimplexPoint::uniform(problem.size());
  if (options.solver == SolverKind::kFlow) {
    const flow::Trajectory traj = flow::integrate(problem, options.flow);
    solution = traj.final_state();
    info.solver = "flow";
    info.final_objective = traj.objective_values.back();
    info.termination = flow::termination_name(traj.terminated_by);
    info.end_time = traj.final_time();
    info.steps = traj.accepted_steps;
    if (!options.trace_csv_path.empty()) {
      write_trajectory_csv(traj, options.trace_csv_path);
    }
  } else {
    const fw::FwTrace trace = fw::solve(problem, options.frank_wolfe);
    solution = trace.final_state();
    info.solver = "frank_wolfe";
    info.final_objective = trace.objective_values.back();
    info.termination = fw::stop_name(trace.stopped_by);
    info.end_time = static_cast<double>(trace.iterations());
    info.steps = trace.iterations();
    if (!options.trace_csv_path.empty()) {
      write_fw_trace_csv(trace, options.trace_csv_path);
    }
  }
  info.solve_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();

  result.model = extract_model(problem, solution, options.sparsity_threshold);
  return result;
}

}  // namespace svmflow
