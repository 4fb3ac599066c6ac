/* svmflow: kernel L2 support vector machine training via simplex gradient
 * flows and Frank-Wolfe iterations.
 *
 * Plain C interface over the C++ core. All objects are opaque handles that
 * must be released with the matching *_free function. Every fallible call
 * returns a svmflow_status; on failure svmflow_last_error() holds a
 * thread-local message describing what went wrong.
 */
#ifndef SVMFLOW_H
#define SVMFLOW_H

#include <stdint.h>

#if defined(_WIN32)
#  define SVMFLOW_API __declspec(dllexport)
#else
#  define SVMFLOW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum svmflow_status {
  SVMFLOW_OK = 0,
  SVMFLOW_ERR_ARG = 1,     /* invalid argument or malformed input file */
  SVMFLOW_ERR_IO = 2,      /* filesystem failure */
  SVMFLOW_ERR_NUMERIC = 3, /* numerical breakdown (non-finite state, ...) */
  SVMFLOW_ERR_INTERNAL = 4
} svmflow_status;

typedef enum svmflow_kernel_family {
  SVMFLOW_KERNEL_LINEAR = 0,
  SVMFLOW_KERNEL_POLYNOMIAL = 1,
  SVMFLOW_KERNEL_GAUSSIAN = 2
} svmflow_kernel_family;

typedef enum svmflow_solver_kind {
  SVMFLOW_SOLVER_FLOW = 0,
  SVMFLOW_SOLVER_FRANK_WOLFE = 1
} svmflow_solver_kind;

typedef enum svmflow_flow_method {
  SVMFLOW_FLOW_RK45_ADAPTIVE = 0,
  SVMFLOW_FLOW_RK4_FIXED = 1
} svmflow_flow_method;

typedef enum svmflow_fw_step_rule {
  SVMFLOW_FW_STEP_STANDARD = 0,     /* 2 / (t + 2) */
  SVMFLOW_FW_STEP_LINE_SEARCH = 1   /* exact line search */
} svmflow_fw_step_rule;

typedef enum svmflow_stop_reason {
  SVMFLOW_STOP_EQUILIBRIUM = 0, /* flow: field norm below stop_tol */
  SVMFLOW_STOP_HORIZON = 1,     /* flow: reached t_end */
  SVMFLOW_STOP_GAP = 2,         /* frank-wolfe: duality gap below gap_tol */
  SVMFLOW_STOP_ITERATIONS = 3   /* frank-wolfe: iteration budget exhausted */
} svmflow_stop_reason;

typedef struct svmflow_dataset_t svmflow_dataset_t;
typedef struct svmflow_model_t svmflow_model_t;

typedef struct svmflow_kernel_spec_t {
  int family;    /* svmflow_kernel_family */
  int degree;    /* polynomial */
  double offset; /* polynomial */
  double gamma;  /* gaussian; gamma = 1 / (2 sigma^2) */
} svmflow_kernel_spec_t;

typedef struct svmflow_train_options_t {
  int solver; /* svmflow_solver_kind */
  svmflow_kernel_spec_t kernel;
  double regularization;      /* C > 0 */
  double sparsity_threshold;  /* tau: keep multipliers > tau */

  /* gradient flow */
  int flow_method; /* svmflow_flow_method */
  double t_end;
  double dt;       /* fixed-step size */
  double tol_step; /* adaptive local error tolerance */
  double stop_tol; /* equilibrium threshold on the sup norm of mu_dot */
  double floor;    /* positivity safeguard */
  int record_every;

  /* frank-wolfe */
  int max_iters;
  double gap_tol;
  int step_rule; /* svmflow_fw_step_rule */

  /* optional trajectory/iterate CSV; NULL writes nothing */
  const char* trace_csv_path;
} svmflow_train_options_t;

typedef struct svmflow_train_summary_t {
  double final_objective;
  int support_count;
  int stop_reason; /* svmflow_stop_reason */
  double end_time; /* flow: time reached; frank-wolfe: iterations */
  long steps;
  double solve_seconds;
} svmflow_train_summary_t;

SVMFLOW_API const char* svmflow_version(void);
SVMFLOW_API const char* svmflow_status_name(int status);
SVMFLOW_API const char* svmflow_stop_reason_name(int reason);

/* Message for the most recent failure on this thread; never NULL. */
SVMFLOW_API const char* svmflow_last_error(void);

/* -------------------------------------------------------------- datasets */

/* Two interleaving half-circles with Gaussian coordinate noise;
 * deterministic per seed. 2 * n_per_class samples in the plane. */
SVMFLOW_API svmflow_status svmflow_two_moons(int n_per_class, double noise_std,
                                             uint64_t seed,
                                             svmflow_dataset_t** out);

/* points is n x m row-major: points[i*m + j] is coordinate j of sample i.
 * labels are -1 or +1. */
SVMFLOW_API svmflow_status svmflow_dataset_from_arrays(int n, int m,
                                                       const double* points,
                                                       const int* labels,
                                                       svmflow_dataset_t** out);

/* CSV: comma-separated, no header, m feature columns then an integer label
 * column (-1 or 1), one sample per line. */
SVMFLOW_API svmflow_status svmflow_dataset_load_csv(const char* path,
                                                    svmflow_dataset_t** out);
SVMFLOW_API svmflow_status svmflow_dataset_save_csv(const svmflow_dataset_t* data,
                                                    const char* path);

SVMFLOW_API int svmflow_dataset_size(const svmflow_dataset_t* data); /* n */
SVMFLOW_API int svmflow_dataset_dim(const svmflow_dataset_t* data);  /* m */
SVMFLOW_API svmflow_status svmflow_dataset_point(const svmflow_dataset_t* data,
                                                 int index, double* out /* m */);
SVMFLOW_API int svmflow_dataset_label(const svmflow_dataset_t* data, int index);
SVMFLOW_API void svmflow_dataset_free(svmflow_dataset_t* data);

/* -------------------------------------------------------------- training */

/* Fills defaults: flow solver, polynomial kernel (degree 3, offset 1),
 * C = 10, tau = 1e-5, adaptive integrator with t_end = 50, 200 Frank-Wolfe
 * iterations with the standard step rule. */
SVMFLOW_API void svmflow_train_options_init(svmflow_train_options_t* options);

/* Trains from the uniform initial point. summary may be NULL. */
SVMFLOW_API svmflow_status svmflow_train(const svmflow_dataset_t* data,
                                         const svmflow_train_options_t* options,
                                         svmflow_train_summary_t* summary,
                                         svmflow_model_t** out);

/* ---------------------------------------------------------------- models */

SVMFLOW_API svmflow_status svmflow_model_save(const svmflow_model_t* model,
                                              const char* path);
SVMFLOW_API svmflow_status svmflow_model_load(const char* path,
                                              svmflow_model_t** out);

SVMFLOW_API int svmflow_model_dim(const svmflow_model_t* model);
SVMFLOW_API int svmflow_model_support_count(const svmflow_model_t* model);
SVMFLOW_API double svmflow_model_bias(const svmflow_model_t* model);

/* Raw decision value at x; the predicted label is its sign (0 maps to +1). */
SVMFLOW_API svmflow_status svmflow_model_decision_value(
    const svmflow_model_t* model, const double* x, int m, double* out);

/* labels, values (both length n) and accuracy are each optional. */
SVMFLOW_API svmflow_status svmflow_model_predict(const svmflow_model_t* model,
                                                 const svmflow_dataset_t* data,
                                                 int* labels, double* values,
                                                 double* accuracy);

/* Decision values on a resolution x resolution lattice over the box,
 * row-major with x fastest (out has resolution^2 entries). */
SVMFLOW_API svmflow_status svmflow_model_grid_values(
    const svmflow_model_t* model, double xmin, double xmax, double ymin,
    double ymax, int resolution, double* out);

/* Same lattice written as CSV with header x,y,value. */
SVMFLOW_API svmflow_status svmflow_model_grid_csv(const svmflow_model_t* model,
                                                  double xmin, double xmax,
                                                  double ymin, double ymax,
                                                  int resolution,
                                                  const char* path);

SVMFLOW_API void svmflow_model_free(svmflow_model_t* model);

/* ---------------------------------------------------------------- oracle */

/* Exact brute-force minimizer of the dual for n <= 12 training points.
 * mu (length n), f_star and multiplier are each optional. */
SVMFLOW_API svmflow_status svmflow_oracle_solve(
    const svmflow_dataset_t* data, const svmflow_kernel_spec_t* kernel,
    double regularization, double* mu, double* f_star, double* multiplier);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SVMFLOW_H */
