#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "core/dataset.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace svmflow;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Distance of a sample to its noiseless moon arc.
double arc_distance(const Eigen::Vector2d& p, int label) {
  if (label == 1) {
    return std::abs(p.norm() - 1.0);
  }
  const Eigen::Vector2d center(1.0, -0.5);
  return std::abs((p - center).norm() - 1.0);
}

}  // namespace

// Bitwise equality for Eigen objects.
template <typename A, typename B>
bool same(const A& a, const B& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

TEST_CASE("two moons: zero noise lands exactly on the arcs") {
  const Dataset tiny = generate_two_moons(1, 0.0, 42);
  REQUIRE(tiny.size() == 2);
  CHECK(same(tiny.point(0), Eigen::Vector2d(1.0, 0.0)));
  CHECK(same(tiny.point(1), Eigen::Vector2d(2.0, -0.5)));
  CHECK(tiny.label(0) == 1);
  CHECK(tiny.label(1) == -1);

  const Dataset data = generate_two_moons(17, 0.0, 0);
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    CHECK(arc_distance(data.point(i), data.label(i)) <= 1e-12);
    if (data.label(i) == 1) {
      CHECK(data.point(i)[1] >= -1e-12);  // upper arc
    } else {
      CHECK(data.point(i)[1] <= -0.5 + 1e-12);  // shifted lower arc
    }
  }
}

TEST_CASE("two moons: deterministic per seed, sensitive to the seed") {
  const Dataset a = generate_two_moons(50, 0.1, 7);
  const Dataset b = generate_two_moons(50, 0.1, 7);
  CHECK(same(a.points(), b.points()));
  CHECK(same(a.labels(), b.labels()));

  const Dataset c = generate_two_moons(50, 0.1, 8);
  CHECK(!same(a.points(), c.points()));
}

TEST_CASE("two moons: argument validation") {
  CHECK_THROWS_AS(generate_two_moons(0, 0.1, 1), InvalidArgument);
  CHECK_THROWS_AS(generate_two_moons(5, -0.1, 1), InvalidArgument);
}

TEST_CASE("load_csv: plain file") {
  const std::string path = temp_path("svmflow_test_plain.csv");
  write_file(path, "1.0,2.0,1\n3.0,4.0,-1\n");
  const Dataset data = load_csv(path);
  REQUIRE(data.size() == 2);
  REQUIRE(data.dim() == 2);
  CHECK(same(data.point(0), Eigen::Vector2d(1.0, 2.0)));
  CHECK(same(data.point(1), Eigen::Vector2d(3.0, 4.0)));
  CHECK(data.label(0) == 1);
  CHECK(data.label(1) == -1);
}

TEST_CASE("load_csv: bad label names the offending row") {
  const std::string path = temp_path("svmflow_test_badlabel.csv");
  write_file(path, "1.0,2.0,1\n3.0,4.0,0\n");
  CHECK_THROWS_WITH_AS(load_csv(path),
                       doctest::Contains("line 2"), InvalidArgument);
}

TEST_CASE("load_csv: inconsistent column count names the offending row") {
  const std::string path = temp_path("svmflow_test_badcols.csv");
  write_file(path, "1.0,2.0,1\n3.0,-1\n");
  CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("line 2"),
                       InvalidArgument);
}

TEST_CASE("load_csv: unparsable field and missing file") {
  const std::string path = temp_path("svmflow_test_garbage.csv");
  write_file(path, "1.0,abc,1\n2.0,3.0,-1\n");
  CHECK_THROWS_AS(load_csv(path), InvalidArgument);
  CHECK_THROWS_WITH_AS(load_csv("/no/such/file.csv"),
                       doctest::Contains("/no/such/file.csv"), IoError);
}

TEST_CASE("load_csv: single-class files are rejected") {
  const std::string path = temp_path("svmflow_test_oneclass.csv");
  write_file(path, "1.0,2.0,1\n3.0,4.0,1\n");
  CHECK_THROWS_AS(load_csv(path), InvalidArgument);
}

TEST_CASE("csv round-trip reproduces a noisy dataset exactly") {
  const std::string path = temp_path("svmflow_test_roundtrip.csv");
  const Dataset data = generate_two_moons(50, 0.1, 7);
  save_csv(data, path);
  const Dataset back = load_csv(path);
  REQUIRE(back.size() == data.size());
  CHECK(same(back.points(), data.points()));  // bitwise, via 17 digits
  CHECK(same(back.labels(), data.labels()));
}

TEST_CASE("dataset: label validation on construction") {
  Eigen::MatrixXd points(1, 2);
  points << 0.0, 1.0;
  Eigen::VectorXi labels(2);
  labels << 1, 2;
  CHECK_THROWS_AS(Dataset(points, labels), InvalidArgument);
}
