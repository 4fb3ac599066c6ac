#include "svmflow/svmflow.h"

#include <cstring>
#include <new>
#include <string>

#include "core/classifier.hpp"
#include "core/dataset.hpp"
#include "core/errors.hpp"
#include "core/model_io.hpp"
#include "core/oracle.hpp"
#include "core/train.hpp"

struct svmflow_dataset_t {
  svmflow::Dataset data;
};

struct svmflow_model_t {
  svmflow::TrainedModel model;
  svmflow::TrainingInfo info;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs the body and folds every exception into a status code.
template <typename Fn>
svmflow_status guarded(Fn&& body) noexcept {
  try {
    body();
    return SVMFLOW_OK;
  } catch (const svmflow::InvalidArgument& e) {
    set_error(e.what());
    return SVMFLOW_ERR_ARG;
  } catch (const svmflow::IoError& e) {
    set_error(e.what());
    return SVMFLOW_ERR_IO;
  } catch (const svmflow::NumericalError& e) {
    set_error(e.what());
    return SVMFLOW_ERR_NUMERIC;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SVMFLOW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SVMFLOW_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return SVMFLOW_ERR_INTERNAL;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw svmflow::InvalidArgument(message);
}

svmflow::KernelSpec to_kernel(const svmflow_kernel_spec_t& spec) {
  switch (spec.family) {
    case SVMFLOW_KERNEL_LINEAR:
      return svmflow::KernelSpec::linear();
    case SVMFLOW_KERNEL_POLYNOMIAL:
      return svmflow::KernelSpec::polynomial(spec.degree, spec.offset);
    case SVMFLOW_KERNEL_GAUSSIAN:
      return svmflow::KernelSpec::gaussian(spec.gamma);
    default:
      throw svmflow::InvalidArgument("unknown kernel family code");
  }
}

svmflow::TrainOptions to_options(const svmflow_train_options_t& options) {
  svmflow::TrainOptions out;
  switch (options.solver) {
    case SVMFLOW_SOLVER_FLOW:
      out.solver = svmflow::SolverKind::kFlow;
      break;
    case SVMFLOW_SOLVER_FRANK_WOLFE:
      out.solver = svmflow::SolverKind::kFrankWolfe;
      break;
    default:
      throw svmflow::InvalidArgument("unknown solver code");
  }
  out.kernel = to_kernel(options.kernel);
  out.regularization = options.regularization;
  out.sparsity_threshold = options.sparsity_threshold;

  switch (options.flow_method) {
    case SVMFLOW_FLOW_RK45_ADAPTIVE:
      out.flow.method = svmflow::flow::Method::kRk45Adaptive;
      break;
    case SVMFLOW_FLOW_RK4_FIXED:
      out.flow.method = svmflow::flow::Method::kRk4Fixed;
      break;
    default:
      throw svmflow::InvalidArgument("unknown flow method code");
  }
  out.flow.t_end = options.t_end;
  out.flow.dt = options.dt;
  out.flow.tol_step = options.tol_step;
  out.flow.stop_tol = options.stop_tol;
  out.flow.floor = options.floor;
  out.flow.record_every = options.record_every;

  out.frank_wolfe.max_iters = options.max_iters;
  out.frank_wolfe.gap_tol = options.gap_tol;
  switch (options.step_rule) {
    case SVMFLOW_FW_STEP_STANDARD:
      out.frank_wolfe.step_rule = svmflow::fw::StepRule::kStandard;
      break;
    case SVMFLOW_FW_STEP_LINE_SEARCH:
      out.frank_wolfe.step_rule = svmflow::fw::StepRule::kExactLineSearch;
      break;
    default:
      throw svmflow::InvalidArgument("unknown step rule code");
  }
  if (options.trace_csv_path != nullptr) {
    out.trace_csv_path = options.trace_csv_path;
  }
  return out;
}

int to_stop_reason(const std::string& termination) {
  if (termination == "equilibrium") return SVMFLOW_STOP_EQUILIBRIUM;
  if (termination == "horizon") return SVMFLOW_STOP_HORIZON;
  if (termination == "gap") return SVMFLOW_STOP_GAP;
  return SVMFLOW_STOP_ITERATIONS;
}

}  // namespace

extern "C" {

const char* svmflow_version(void) { return "0.1.0"; }

const char* svmflow_status_name(int status) {
  switch (status) {
    case SVMFLOW_OK: return "ok";
    case SVMFLOW_ERR_ARG: return "invalid argument";
    case SVMFLOW_ERR_IO: return "io error";
    case SVMFLOW_ERR_NUMERIC: return "numerical error";
    case SVMFLOW_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* svmflow_stop_reason_name(int reason) {
  switch (reason) {
    case SVMFLOW_STOP_EQUILIBRIUM: return "equilibrium";
    case SVMFLOW_STOP_HORIZON: return "horizon";
    case SVMFLOW_STOP_GAP: return "gap";
    case SVMFLOW_STOP_ITERATIONS: return "iterations";
    default: return "unknown";
  }
}

const char* svmflow_last_error(void) { return g_last_error.c_str(); }

svmflow_status svmflow_two_moons(int n_per_class, double noise_std,
                                 uint64_t seed, svmflow_dataset_t** out) {
  return guarded([&] {
    require(out != nullptr, "two_moons: null output handle");
    *out = new svmflow_dataset_t{
        svmflow::generate_two_moons(n_per_class, noise_std, seed)};
  });
}

svmflow_status svmflow_dataset_from_arrays(int n, int m, const double* points,
                                           const int* labels,
                                           svmflow_dataset_t** out) {
  return guarded([&] {
    require(out != nullptr && points != nullptr && labels != nullptr,
            "dataset_from_arrays: null pointer");
    require(n >= 1 && m >= 1, "dataset_from_arrays: need n >= 1 and m >= 1");
    Eigen::MatrixXd p(m, n);
    Eigen::VectorXi y(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) p(j, i) = points[static_cast<long>(i) * m + j];
      y[i] = labels[i];
    }
    *out = new svmflow_dataset_t{svmflow::Dataset(std::move(p), std::move(y))};
  });
}

svmflow_status svmflow_dataset_load_csv(const char* path,
                                        svmflow_dataset_t** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "load_csv: null pointer");
    *out = new svmflow_dataset_t{svmflow::load_csv(path)};
  });
}

svmflow_status svmflow_dataset_save_csv(const svmflow_dataset_t* data,
                                        const char* path) {
  return guarded([&] {
    require(data != nullptr && path != nullptr, "save_csv: null pointer");
    svmflow::save_csv(data->data, path);
  });
}

int svmflow_dataset_size(const svmflow_dataset_t* data) {
  return data == nullptr ? 0 : static_cast<int>(data->data.size());
}

int svmflow_dataset_dim(const svmflow_dataset_t* data) {
  return data == nullptr ? 0 : static_cast<int>(data->data.dim());
}

svmflow_status svmflow_dataset_point(const svmflow_dataset_t* data, int index,
                                     double* out) {
  return guarded([&] {
    require(data != nullptr && out != nullptr, "dataset_point: null pointer");
    require(index >= 0 && index < data->data.size(),
            "dataset_point: index out of range");
    const auto column = data->data.points().col(index);
    for (Eigen::Index j = 0; j < column.size(); ++j) out[j] = column[j];
  });
}

int svmflow_dataset_label(const svmflow_dataset_t* data, int index) {
  if (data == nullptr || index < 0 || index >= data->data.size()) return 0;
  return data->data.label(index);
}

void svmflow_dataset_free(svmflow_dataset_t* data) { delete data; }

void svmflow_train_options_init(svmflow_train_options_t* options) {
  if (options == nullptr) return;
  std::memset(options, 0, sizeof(*options));
  options->solver = SVMFLOW_SOLVER_FLOW;
  options->kernel.family = SVMFLOW_KERNEL_POLYNOMIAL;
  options->kernel.degree = 3;
  options->kernel.offset = 1.0;
  options->kernel.gamma = 1.0;
  options->regularization = 10.0;
  options->sparsity_threshold = 1e-5;
  options->flow_method = SVMFLOW_FLOW_RK45_ADAPTIVE;
  options->t_end = 50.0;
  options->dt = 1e-2;
  options->tol_step = 1e-8;
  options->stop_tol = 1e-8;
  options->floor = 1e-12;
  options->record_every = 1;
  options->max_iters = 200;
  options->gap_tol = 0.0;
  options->step_rule = SVMFLOW_FW_STEP_STANDARD;
  options->trace_csv_path = nullptr;
}

svmflow_status svmflow_train(const svmflow_dataset_t* data,
                             const svmflow_train_options_t* options,
                             svmflow_train_summary_t* summary,
                             svmflow_model_t** out) {
  return guarded([&] {
    require(data != nullptr && options != nullptr && out != nullptr,
            "train: null pointer");
    svmflow::TrainResult result =
        svmflow::train(data->data, to_options(*options));
    if (summary != nullptr) {
      summary->final_objective = result.info.final_objective;
      summary->support_count = static_cast<int>(result.model.support_count());
      summary->stop_reason = to_stop_reason(result.info.termination);
      summary->end_time = result.info.end_time;
      summary->steps = result.info.steps;
      summary->solve_seconds = result.info.solve_seconds;
    }
    *out = new svmflow_model_t{std::move(result.model), std::move(result.info)};
  });
}

svmflow_status svmflow_model_save(const svmflow_model_t* model,
                                  const char* path) {
  return guarded([&] {
    require(model != nullptr && path != nullptr, "model_save: null pointer");
    svmflow::save_model(model->model, model->info, path);
  });
}

svmflow_status svmflow_model_load(const char* path, svmflow_model_t** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "model_load: null pointer");
    svmflow::LoadedModel loaded = svmflow::load_model(path);
    *out = new svmflow_model_t{std::move(loaded.model), std::move(loaded.info)};
  });
}

int svmflow_model_dim(const svmflow_model_t* model) {
  return model == nullptr ? 0 : static_cast<int>(model->model.dim());
}

int svmflow_model_support_count(const svmflow_model_t* model) {
  return model == nullptr ? 0 : static_cast<int>(model->model.support_count());
}

double svmflow_model_bias(const svmflow_model_t* model) {
  return model == nullptr ? 0.0 : model->model.theta;
}

svmflow_status svmflow_model_decision_value(const svmflow_model_t* model,
                                            const double* x, int m,
                                            double* out) {
  return guarded([&] {
    require(model != nullptr && x != nullptr && out != nullptr,
            "decision_value: null pointer");
    const Eigen::Map<const Eigen::VectorXd> point(x, m);
    *out = svmflow::decision_value(model->model, point);
  });
}

svmflow_status svmflow_model_predict(const svmflow_model_t* model,
                                     const svmflow_dataset_t* data, int* labels,
                                     double* values, double* accuracy) {
  return guarded([&] {
    require(model != nullptr && data != nullptr, "predict: null pointer");
    const svmflow::Prediction prediction =
        svmflow::predict(model->model, data->data);
    const int n = static_cast<int>(prediction.labels.size());
    for (int i = 0; i < n; ++i) {
      if (labels != nullptr) labels[i] = prediction.labels[i];
      if (values != nullptr) values[i] = prediction.values[i];
    }
    if (accuracy != nullptr) *accuracy = prediction.accuracy;
  });
}

svmflow_status svmflow_model_grid_values(const svmflow_model_t* model,
                                         double xmin, double xmax, double ymin,
                                         double ymax, int resolution,
                                         double* out) {
  return guarded([&] {
    require(model != nullptr && out != nullptr, "grid_values: null pointer");
    const svmflow::DecisionGrid grid = svmflow::decision_grid(
        model->model, xmin, xmax, ymin, ymax, resolution);
    for (int iy = 0; iy < resolution; ++iy) {
      for (int ix = 0; ix < resolution; ++ix) {
        out[static_cast<long>(iy) * resolution + ix] = grid.values(iy, ix);
      }
    }
  });
}

svmflow_status svmflow_model_grid_csv(const svmflow_model_t* model, double xmin,
                                      double xmax, double ymin, double ymax,
                                      int resolution, const char* path) {
  return guarded([&] {
    require(model != nullptr && path != nullptr, "grid_csv: null pointer");
    const svmflow::DecisionGrid grid = svmflow::decision_grid(
        model->model, xmin, xmax, ymin, ymax, resolution);
    svmflow::write_grid_csv(grid, path);
  });
}

void svmflow_model_free(svmflow_model_t* model) { delete model; }

svmflow_status svmflow_oracle_solve(const svmflow_dataset_t* data,
                                    const svmflow_kernel_spec_t* kernel,
                                    double regularization, double* mu,
                                    double* f_star, double* multiplier) {
  return guarded([&] {
    require(data != nullptr && kernel != nullptr, "oracle: null pointer");
    const svmflow::DualProblem problem(data->data, to_kernel(*kernel),
                                       regularization);
    const svmflow::oracle::OracleSolution solution =
        svmflow::oracle::solve_exact(problem);
    if (mu != nullptr) {
      for (Eigen::Index i = 0; i < solution.minimizer.size(); ++i) {
        mu[i] = solution.minimizer[i];
      }
    }
    if (f_star != nullptr) *f_star = solution.optimal_value;
    if (multiplier != nullptr) *multiplier = solution.multiplier;
  });
}

}  // extern "C"
