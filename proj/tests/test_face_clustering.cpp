#include <cmath>
#include <random>

#include <doctest.h>

#include "hive/core/errors.hpp"
#include "hive/understanding/face_clustering.hpp"
#include "support/oracles.hpp"

using namespace hive;
using hive::understanding::cluster_faces;

namespace {

std::vector<double> unit(std::vector<double> v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

// A tight bundle: the axis vector plus small, renormalized perturbations.
std::vector<double> jitter(const std::vector<double>& axis, std::mt19937& rng) {
  std::normal_distribution<double> noise(0.0, 0.02);
  std::vector<double> v = axis;
  for (double& x : v) x += noise(rng);
  return unit(v);
}

}  // namespace

TEST_CASE("identical vectors share a cluster") {
  const auto axis = unit({1.0, 0.0, 0.0});
  CHECK(cluster_faces({axis, axis}, 0.5) == std::vector<int>{0, 0});
}

TEST_CASE("orthogonal vectors split into two clusters") {
  CHECK(cluster_faces({unit({1, 0, 0}), unit({0, 1, 0})}, 0.5) == std::vector<int>{0, 1});
}

TEST_CASE("cluster ids are dense and numbered by founding order") {
  const auto labels =
      cluster_faces({unit({0, 0, 1}), unit({1, 0, 0}), unit({0, 0, 1}), unit({0, 1, 0})}, 0.9);
  CHECK(labels == std::vector<int>{0, 1, 0, 2});
}

TEST_CASE("three tight bundles resolve to three clusters matching the components oracle") {
  std::mt19937 rng(4242);
  const std::vector<std::vector<double>> axes{unit({1, 0, 0, 0}), unit({0, 1, 0, 0}),
                                              unit({0, 0, 1, 0})};
  std::vector<std::vector<double>> samples;
  std::vector<int> truth;
  for (int i = 0; i < 10; ++i) {
    const int which = i % 3;
    samples.push_back(jitter(axes[which], rng));
    truth.push_back(which);
  }
  const double threshold = 0.75;
  const auto labels = cluster_faces(samples, threshold);
  const auto oracle = hive::testing::oracle_components(samples, threshold);
  REQUIRE(labels.size() == samples.size());
  CHECK(labels == oracle);
  // and the labels recover the generating bundles
  CHECK(labels == truth);
}

TEST_CASE("embeddings must share a dimension and be unit length") {
  CHECK_THROWS_AS(cluster_faces({{1.0, 0.0}, {1.0, 0.0, 0.0}}, 0.5), ValidationError);
  CHECK_THROWS_AS(cluster_faces({{0.9, 0.0}}, 0.5), ValidationError);
  CHECK_THROWS_AS(cluster_faces({{}}, 0.5), ValidationError);
}

TEST_CASE("the similarity threshold must sit strictly inside (0, 1)") {
  const auto axis = unit({1.0, 0.0});
  CHECK_THROWS_AS(cluster_faces({axis}, 0.0), ValidationError);
  CHECK_THROWS_AS(cluster_faces({axis}, 1.0), ValidationError);
  CHECK(cluster_faces({axis}, 0.5) == std::vector<int>{0});
  CHECK(cluster_faces({}, 0.5).empty());
}
