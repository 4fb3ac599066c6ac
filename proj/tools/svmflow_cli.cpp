// Command-line front end for the svmflow shared library. Talks to the core
// exclusively through the public C API.
//
// Exit codes: 0 success, 1 usage/input error, 2 numerical failure.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svmflow/svmflow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

int exit_code_for(svmflow_status status) {
  switch (status) {
    case SVMFLOW_OK:
      return kExitOk;
    case SVMFLOW_ERR_ARG:
    case SVMFLOW_ERR_IO:
      return kExitUsage;
    default:
      return kExitNumeric;
  }
}

int fail(svmflow_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", svmflow_last_error(),
               svmflow_status_name(status));
  return exit_code_for(status);
}

using DatasetPtr = std::unique_ptr<svmflow_dataset_t, void (*)(svmflow_dataset_t*)>;
using ModelPtr = std::unique_ptr<svmflow_model_t, void (*)(svmflow_model_t*)>;

DatasetPtr wrap(svmflow_dataset_t* data) { return {data, svmflow_dataset_free}; }
ModelPtr wrap(svmflow_model_t* model) { return {model, svmflow_model_free}; }

struct KernelArgs {
  std::string name = "poly";
  int degree = 3;
  double offset = 1.0;
  double gamma = 1.0;

  svmflow_kernel_spec_t spec() const {
    svmflow_kernel_spec_t out{};
    if (name == "linear") {
      out.family = SVMFLOW_KERNEL_LINEAR;
    } else if (name == "poly") {
      out.family = SVMFLOW_KERNEL_POLYNOMIAL;
    } else {
      out.family = SVMFLOW_KERNEL_GAUSSIAN;
    }
    out.degree = degree;
    out.offset = offset;
    out.gamma = gamma;
    return out;
  }
};

void add_kernel_flags(CLI::App* cmd, KernelArgs& kernel) {
  cmd->add_option("--kernel", kernel.name, "Kernel family")
      ->check(CLI::IsMember({"linear", "poly", "rbf"}))
      ->capture_default_str();
  cmd->add_option("--degree", kernel.degree, "Polynomial degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--offset", kernel.offset, "Polynomial offset")
      ->capture_default_str();
  cmd->add_option("--gamma", kernel.gamma,
                  "Gaussian width parameter, gamma = 1/(2 sigma^2)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int run_gen(int n_per_class, double noise, std::uint64_t seed,
            const std::string& out_path) {
  svmflow_dataset_t* raw = nullptr;
  svmflow_status status = svmflow_two_moons(n_per_class, noise, seed, &raw);
  if (status != SVMFLOW_OK) return fail(status);
  auto data = wrap(raw);
  status = svmflow_dataset_save_csv(data.get(), out_path.c_str());
  if (status != SVMFLOW_OK) return fail(status);
  std::printf("wrote %d samples to %s\n", svmflow_dataset_size(data.get()),
              out_path.c_str());
  return kExitOk;
}

int run_train(const std::string& data_path, const std::string& solver,
              const KernelArgs& kernel, double c, double t_end, double stop_tol,
              double dt, bool dt_given, int max_iters,
              const std::string& step_rule, const std::string& trace_path,
              const std::string& out_path) {
  svmflow_dataset_t* raw_data = nullptr;
  svmflow_status status = svmflow_dataset_load_csv(data_path.c_str(), &raw_data);
  if (status != SVMFLOW_OK) return fail(status);
  auto data = wrap(raw_data);

  svmflow_train_options_t options;
  svmflow_train_options_init(&options);
  options.solver =
      solver == "flow" ? SVMFLOW_SOLVER_FLOW : SVMFLOW_SOLVER_FRANK_WOLFE;
  options.kernel = kernel.spec();
  options.regularization = c;
  options.t_end = t_end;
  options.stop_tol = stop_tol;
  if (dt_given) {
    options.flow_method = SVMFLOW_FLOW_RK4_FIXED;
    options.dt = dt;
  }
  options.max_iters = max_iters;
  options.step_rule = step_rule == "linesearch" ? SVMFLOW_FW_STEP_LINE_SEARCH
                                                : SVMFLOW_FW_STEP_STANDARD;
  if (!trace_path.empty()) options.trace_csv_path = trace_path.c_str();

  svmflow_train_summary_t summary{};
  svmflow_model_t* raw_model = nullptr;
  status = svmflow_train(data.get(), &options, &summary, &raw_model);
  if (status != SVMFLOW_OK) return fail(status);
  auto model = wrap(raw_model);

  status = svmflow_model_save(model.get(), out_path.c_str());
  if (status != SVMFLOW_OK) return fail(status);

  std::printf("final objective %.17g\n", summary.final_objective);
  std::printf("support count %d\n", summary.support_count);
  std::printf("termination %s\n", svmflow_stop_reason_name(summary.stop_reason));
  std::printf("model written to %s\n", out_path.c_str());
  return kExitOk;
}

int run_predict(const std::string& model_path, const std::string& data_path,
                const std::string& out_path) {
  svmflow_model_t* raw_model = nullptr;
  svmflow_status status = svmflow_model_load(model_path.c_str(), &raw_model);
  if (status != SVMFLOW_OK) return fail(status);
  auto model = wrap(raw_model);

  svmflow_dataset_t* raw_data = nullptr;
  status = svmflow_dataset_load_csv(data_path.c_str(), &raw_data);
  if (status != SVMFLOW_OK) return fail(status);
  auto data = wrap(raw_data);

  const int n = svmflow_dataset_size(data.get());
  std::vector<int> labels(n);
  std::vector<double> values(n);
  double accuracy = 0.0;
  status = svmflow_model_predict(model.get(), data.get(), labels.data(),
                                 values.data(), &accuracy);
  if (status != SVMFLOW_OK) return fail(status);

  std::FILE* out = std::fopen(out_path.c_str(), "w");
  if (out == nullptr) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                 out_path.c_str());
    return kExitUsage;
  }
  std::fprintf(out, "predicted_label,decision_value\n");
  for (int i = 0; i < n; ++i) {
    std::fprintf(out, "%d,%.17g\n", labels[i], values[i]);
  }
  std::fclose(out);

  std::printf("accuracy %.6f\n", accuracy);
  std::printf("predictions written to %s\n", out_path.c_str());
  return kExitOk;
}

int run_grid(const std::string& model_path, double xmin, double xmax,
             double ymin, double ymax, int resolution,
             const std::string& out_path) {
  svmflow_model_t* raw_model = nullptr;
  svmflow_status status = svmflow_model_load(model_path.c_str(), &raw_model);
  if (status != SVMFLOW_OK) return fail(status);
  auto model = wrap(raw_model);

  status = svmflow_model_grid_csv(model.get(), xmin, xmax, ymin, ymax,
                                  resolution, out_path.c_str());
  if (status != SVMFLOW_OK) return fail(status);
  std::printf("grid written to %s\n", out_path.c_str());
  return kExitOk;
}

int run_oracle(const std::string& data_path, const KernelArgs& kernel,
               double c) {
  svmflow_dataset_t* raw_data = nullptr;
  svmflow_status status = svmflow_dataset_load_csv(data_path.c_str(), &raw_data);
  if (status != SVMFLOW_OK) return fail(status);
  auto data = wrap(raw_data);

  const int n = svmflow_dataset_size(data.get());
  std::vector<double> mu(n);
  double f_star = 0.0;
  double multiplier = 0.0;
  const svmflow_kernel_spec_t spec = kernel.spec();
  status = svmflow_oracle_solve(data.get(), &spec, c, mu.data(), &f_star,
                                &multiplier);
  if (status != SVMFLOW_OK) return fail(status);

  std::printf("f_star %.17g\n", f_star);
  std::printf("multiplier %.17g\n", multiplier);
  for (int i = 0; i < n; ++i) {
    std::printf("mu_%d %.17g\n", i + 1, mu[i]);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel L2-SVM training via simplex gradient flows "
               "and Frank-Wolfe iterations"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a two-moons dataset CSV");
  int n_per_class = 50;
  double noise = 0.1;
  std::uint64_t seed = 7;
  std::string gen_out;
  gen->add_option("--n-per-class", n_per_class, "Samples per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--noise", noise, "Gaussian noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  // train
  auto* train = app.add_subcommand("train", "Train a model on a dataset CSV");
  std::string train_data, train_out, train_trace;
  std::string solver = "flow";
  std::string step_rule = "standard";
  KernelArgs kernel;
  double c = 10.0;
  double t_end = 50.0;
  double stop_tol = 1e-8;
  double dt = 1e-2;
  int max_iters = 200;
  train->add_option("--data", train_data, "Training CSV")->required();
  train->add_option("--solver", solver, "Training algorithm")
      ->check(CLI::IsMember({"flow", "fw"}))
      ->capture_default_str();
  add_kernel_flags(train, kernel);
  train->add_option("--C", c, "Regularization parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--t-end", t_end, "Flow integration horizon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--stop-tol", stop_tol, "Flow equilibrium tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* dt_option =
      train->add_option("--dt", dt, "Fixed step size (selects classic RK4)")
          ->check(CLI::PositiveNumber);
  train->add_option("--max-iters", max_iters, "Frank-Wolfe iteration budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--step-rule", step_rule, "Frank-Wolfe step rule")
      ->check(CLI::IsMember({"standard", "linesearch"}))
      ->capture_default_str();
  train->add_option("--trace", train_trace, "Optional trajectory/iterate CSV");
  train->add_option("--out", train_out, "Output model file")->required();

  // predict
  auto* predict = app.add_subcommand("predict", "Score a dataset with a model");
  std::string predict_model, predict_data, predict_out;
  predict->add_option("--model", predict_model, "Model file")->required();
  predict->add_option("--data", predict_data, "Dataset CSV")->required();
  predict->add_option("--out", predict_out, "Output predictions CSV")->required();

  // grid
  auto* grid = app.add_subcommand(
      "grid", "Decision values on a 2-D lattice, for contour plots");
  std::string grid_model, grid_out;
  double xmin = -1.5, xmax = 2.5, ymin = -1.5, ymax = 1.5;
  int resolution = 100;
  grid->add_option("--model", grid_model, "Model file")->required();
  grid->add_option("--xmin", xmin)->capture_default_str();
  grid->add_option("--xmax", xmax)->capture_default_str();
  grid->add_option("--ymin", ymin)->capture_default_str();
  grid->add_option("--ymax", ymax)->capture_default_str();
  grid->add_option("--resolution", resolution, "Lattice points per axis")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  grid->add_option("--out", grid_out, "Output grid CSV")->required();

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "Exact brute-force dual solution (n <= 12), for debugging");
  std::string oracle_data;
  KernelArgs oracle_kernel;
  double oracle_c = 10.0;
  oracle->add_option("--data", oracle_data, "Dataset CSV")->required();
  add_kernel_flags(oracle, oracle_kernel);
  oracle->add_option("--C", oracle_c, "Regularization parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) return run_gen(n_per_class, noise, seed, gen_out);
  if (train->parsed()) {
    return run_train(train_data, solver, kernel, c, t_end, stop_tol, dt,
                     dt_option->count() > 0, max_iters, step_rule, train_trace,
                     train_out);
  }
  if (predict->parsed()) return run_predict(predict_model, predict_data, predict_out);
  if (grid->parsed()) return run_grid(grid_model, xmin, xmax, ymin, ymax,
                                      resolution, grid_out);
  if (oracle->parsed()) return run_oracle(oracle_data, oracle_kernel, oracle_c);
  return kExitUsage;
}
