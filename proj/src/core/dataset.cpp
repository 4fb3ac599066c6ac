#include "core/dataset.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "core/csv.hpp"
#include "core/errors.hpp"

namespace svmflow {

Dataset::Dataset(Eigen::MatrixXd points, Eigen::VectorXi labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.cols() != labels_.size()) {
    throw InvalidArgument("dataset: points/labels size mismatch");
  }
  if (points_.cols() < 1 || points_.rows() < 1) {
    throw InvalidArgument("dataset: need at least one sample and one feature");
  }
  for (Eigen::Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != 1 && labels_[i] != -1) {
      throw InvalidArgument("dataset: label must be -1 or 1");
    }
  }
  if (!points_.allFinite()) {
    throw InvalidArgument("dataset: non-finite feature value");
  }
}

void Dataset::require_two_classes() const {
  if (size() < 2) {
    throw InvalidArgument("dataset: need at least two samples");
  }
  const bool has_pos = (labels_.array() == 1).any();
  const bool has_neg = (labels_.array() == -1).any();
  if (!has_pos || !has_neg) {
    throw InvalidArgument("dataset: both classes must be present");
  }
}

Dataset generate_two_moons(int n_per_class, double noise_std,
                           std::uint64_t seed) {
  if (n_per_class < 1) {
    throw InvalidArgument("two_moons: n_per_class must be >= 1");
  }
  if (noise_std < 0.0 || !std::isfinite(noise_std)) {
    throw InvalidArgument("two_moons: noise_std must be finite and >= 0");
  }

  const int n = 2 * n_per_class;
  Eigen::MatrixXd points(2, n);
  Eigen::VectorXi labels(n);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_std > 0.0 ? noise_std : 1.0);
  auto jitter = [&]() { return noise_std > 0.0 ? noise(rng) : 0.0; };

  const double pi = std::numbers::pi;
  for (int k = 0; k < n_per_class; ++k) {
    const double t =
        n_per_class > 1 ? pi * static_cast<double>(k) / (n_per_class - 1) : 0.0;
    points(0, k) = std::cos(t) + jitter();
    points(1, k) = std::sin(t) + jitter();
    labels[k] = 1;
    points(0, n_per_class + k) = 1.0 + std::cos(t) + jitter();
    points(1, n_per_class + k) = -0.5 - std::sin(t) + jitter();
    labels[n_per_class + k] = -1;
  }

  Dataset data(std::move(points), std::move(labels));
  data.require_two_classes();
  return data;
}

namespace {

// Parses one numeric field; the remainder after the number may only be blank.
double parse_field(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin) {
    throw InvalidArgument("csv line " + std::to_string(line_no) +
                          ": cannot parse number from '" + field + "'");
  }
  while (*end != '\0') {
    if (!std::isspace(static_cast<unsigned char>(*end))) {
      throw InvalidArgument("csv line " + std::to_string(line_no) +
                            ": trailing garbage in field '" + field + "'");
    }
    ++end;
  }
  if (!std::isfinite(value)) {
    throw InvalidArgument("csv line " + std::to_string(line_no) +
                          ": non-finite value '" + field + "'");
  }
  return value;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::string line;
  int line_no = 0;
  std::size_t n_fields = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string> fields = split_commas(line);
    if (fields.size() < 2) {
      throw InvalidArgument("csv line " + std::to_string(line_no) +
                            ": expected at least one feature and a label");
    }
    if (n_fields == 0) {
      n_fields = fields.size();
    } else if (fields.size() != n_fields) {
      throw InvalidArgument("csv line " + std::to_string(line_no) +
                            ": expected " + std::to_string(n_fields) +
                            " fields, got " + std::to_string(fields.size()));
    }

    std::vector<double> row(n_fields - 1);
    for (std::size_t j = 0; j + 1 < n_fields; ++j) {
      row[j] = parse_field(fields[j], line_no);
    }
    const double label = parse_field(fields.back(), line_no);
    if (label != 1.0 && label != -1.0) {
      throw InvalidArgument("csv line " + std::to_string(line_no) +
                            ": label must be -1 or 1, got '" + fields.back() +
                            "'");
    }
    rows.push_back(std::move(row));
    labels.push_back(static_cast<int>(label));
  }
  if (rows.empty()) {
    throw InvalidArgument("csv: file '" + path + "' holds no samples");
  }

  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index m = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd points(m, n);
  Eigen::VectorXi y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) points(j, i) = rows[i][j];
    y[i] = labels[i];
  }

  Dataset data(std::move(points), std::move(y));
  data.require_two_classes();
  return data;
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    for (Eigen::Index j = 0; j < data.dim(); ++j) {
      out << csv::num(data.points()(j, i)) << ',';
    }
    out << data.label(i) << '\n';
  }
  if (!out) {
    throw IoError("write failure on '" + path + "'");
  }
}

}  // namespace svmflow
