#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace svmflow {

/// Labeled binary-classification data. Samples are stored column-wise:
/// points().col(i) is sample i, labels()[i] is -1 or +1.
class Dataset {
 public:
  /// Validates shape consistency and that every label is exactly -1 or +1.
  /// Direct construction permits single-class data (useful for small
  /// algebraic fixtures); the ingestion paths below and training additionally
  /// require both classes, see require_two_classes().
  Dataset(Eigen::MatrixXd points, Eigen::VectorXi labels);

  Eigen::Index size() const { return points_.cols(); }
  Eigen::Index dim() const { return points_.rows(); }
  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::VectorXi& labels() const { return labels_; }
  Eigen::VectorXd point(Eigen::Index i) const { return points_.col(i); }
  int label(Eigen::Index i) const { return labels_[i]; }

  /// Throws InvalidArgument unless n >= 2 and both classes are present.
  void require_two_classes() const;

 private:
  Eigen::MatrixXd points_;
  Eigen::VectorXi labels_;
};

/// Two interleaving half-circles in the plane. Class +1 lies on the upper
/// unit semicircle centered at the origin; class -1 on the lower unit
/// semicircle shifted by (+1, -0.5). Each coordinate is perturbed by
/// Gaussian noise of standard deviation noise_std. Deterministic per seed.
Dataset generate_two_moons(int n_per_class, double noise_std,
                           std::uint64_t seed);

/// Comma-separated, no header, one sample per line: m feature values
/// followed by an integer label, -1 or 1. Parse errors name the offending
/// 1-based line. Requires at least two samples and both classes.
Dataset load_csv(const std::string& path);

/// Inverse of load_csv; features written with 17 significant digits so the
/// round-trip reproduces every double exactly.
void save_csv(const Dataset& data, const std::string& path);

}  // namespace svmflow
