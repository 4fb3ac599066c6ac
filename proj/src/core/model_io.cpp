#include "core/model_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "core/csv.hpp"
#include "core/errors.hpp"

namespace svmflow {

namespace {

using nlohmann::json;

json kernel_to_json(const KernelSpec& spec) {
  json j;
  j["family"] = spec.family_name();
  switch (spec.family) {
    case KernelFamily::kLinear:
      break;
    case KernelFamily::kPolynomial:
      j["degree"] = spec.degree;
      j["offset"] = spec.offset;
      break;
    case KernelFamily::kGaussian:
      j["gamma"] = spec.gamma;
      break;
  }
  return j;
}

KernelSpec kernel_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "linear") return KernelSpec::linear();
  if (family == "polynomial") {
    return KernelSpec::polynomial(j.at("degree").get<int>(),
                                  j.at("offset").get<double>());
  }
  if (family == "gaussian") {
    return KernelSpec::gaussian(j.at("gamma").get<double>());
  }
  throw IoError("model file: unknown kernel family '" + family + "'");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void save_model(const TrainedModel& model, const TrainingInfo& info,
                const std::string& path) {
  json j;
  j["format_version"] = kModelFormatVersion;
  j["kernel"] = kernel_to_json(model.kernel);

  json vectors = json::array();
  for (Eigen::Index s = 0; s < model.support_count(); ++s) {
    json v = json::array();
    for (Eigen::Index r = 0; r < model.dim(); ++r) {
      v.push_back(model.support_points(r, s));
    }
    vectors.push_back(std::move(v));
  }
  j["support_vectors"] = std::move(vectors);

  json coeffs = json::array();
  for (Eigen::Index s = 0; s < model.support_count(); ++s) {
    coeffs.push_back(model.coefficients[s]);
  }
  j["coefficients"] = std::move(coeffs);
  j["theta"] = model.theta;
  j["support_indices"] = model.support_indices;

  j["training"] = {{"solver", info.solver},
                   {"C", info.regularization},
                   {"final_objective", info.final_objective},
                   {"termination", info.termination},
                   {"end_time", info.end_time},
                   {"steps", info.steps},
                   {"solve_seconds", info.solve_seconds}};

  auto out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failure on '" + path + "'");
}

LoadedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file '" + path + "'");

  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("model file '" + path + "': " + e.what());
  }

  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw IoError("model file '" + path + "': unsupported format_version " +
                    std::to_string(version));
    }

    LoadedModel loaded;
    TrainedModel& model = loaded.model;
    model.kernel = kernel_from_json(j.at("kernel"));
    model.theta = j.at("theta").get<double>();

    const auto& vectors = j.at("support_vectors");
    const auto& coeffs = j.at("coefficients");
    const auto& indices = j.at("support_indices");
    if (vectors.empty() || coeffs.size() != vectors.size() ||
        indices.size() != vectors.size()) {
      throw IoError("model file '" + path + "': inconsistent array lengths");
    }
    const Eigen::Index count = static_cast<Eigen::Index>(vectors.size());
    const Eigen::Index dim = static_cast<Eigen::Index>(vectors.front().size());
    if (dim < 1) throw IoError("model file '" + path + "': empty support vector");

    model.support_points.resize(dim, count);
    model.coefficients.resize(count);
    for (Eigen::Index s = 0; s < count; ++s) {
      const auto& v = vectors[static_cast<std::size_t>(s)];
      if (static_cast<Eigen::Index>(v.size()) != dim) {
        throw IoError("model file '" + path + "': ragged support vectors");
      }
      for (Eigen::Index r = 0; r < dim; ++r) {
        model.support_points(r, s) = v[static_cast<std::size_t>(r)].get<double>();
      }
      model.coefficients[s] = coeffs[static_cast<std::size_t>(s)].get<double>();
      model.support_indices.push_back(
          indices[static_cast<std::size_t>(s)].get<Eigen::Index>());
    }

    const auto& training = j.at("training");
    TrainingInfo& info = loaded.info;
    info.solver = training.at("solver").get<std::string>();
    info.regularization = training.at("C").get<double>();
    info.final_objective = training.at("final_objective").get<double>();
    info.termination = training.at("termination").get<std::string>();
    info.end_time = training.at("end_time").get<double>();
    info.steps = training.at("steps").get<long>();
    info.solve_seconds = training.at("solve_seconds").get<double>();
    return loaded;
  } catch (const json::exception& e) {
    throw IoError("model file '" + path + "': " + e.what());
  }
}

void write_trajectory_csv(const flow::Trajectory& traj, const std::string& path) {
  auto out = open_out(path);
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().size();
  out << "t,f";
  for (Eigen::Index i = 0; i < n; ++i) out << ",mu_" << (i + 1);
  out << '\n';
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << csv::num(traj.times[k]) << ',' << csv::num(traj.objective_values[k]);
    const Eigen::VectorXd& mu = traj.states[k].coords();
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << csv::num(mu[i]);
    out << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

void write_fw_trace_csv(const fw::FwTrace& trace, const std::string& path) {
  auto out = open_out(path);
  const Eigen::Index n = trace.iterates.empty() ? 0 : trace.iterates.front().size();
  out << "t,f,gap";
  for (Eigen::Index i = 0; i < n; ++i) out << ",mu_" << (i + 1);
  out << '\n';
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    out << k << ',' << csv::num(trace.objective_values[k]) << ','
        << csv::num(trace.gaps[k]);
    const Eigen::VectorXd& mu = trace.iterates[k].coords();
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << csv::num(mu[i]);
    out << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

void write_grid_csv(const DecisionGrid& grid, const std::string& path) {
  auto out = open_out(path);
  out << "x,y,value\n";
  for (int iy = 0; iy < grid.resolution; ++iy) {
    for (int ix = 0; ix < grid.resolution; ++ix) {
      out << csv::num(grid.x_at(ix)) << ',' << csv::num(grid.y_at(iy)) << ','
          << csv::num(grid.values(iy, ix)) << '\n';
    }
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

void write_predictions_csv(const Prediction& prediction, const std::string& path) {
  auto out = open_out(path);
  out << "predicted_label,decision_value\n";
  for (std::size_t i = 0; i < prediction.labels.size(); ++i) {
    out << prediction.labels[i] << ',' << csv::num(prediction.values[i]) << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace svmflow
