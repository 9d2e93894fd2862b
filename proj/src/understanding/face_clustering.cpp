#include "hive/understanding/face_clustering.hpp"

#include <cmath>
#include <cstddef>

#include "hive/core/errors.hpp"

namespace hive::understanding {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

}  // namespace

std::vector<int> cluster_faces(const std::vector<std::vector<double>>& embeddings,
                               double similarity_threshold) {
  if (!(similarity_threshold > 0.0 && similarity_threshold < 1.0)) {
    throw ValidationError("cluster_faces: similarity threshold must lie in (0, 1)");
  }
  if (embeddings.empty()) {
    return {};
  }
  const std::size_t dim = embeddings.front().size();
  for (const auto& e : embeddings) {
    if (e.size() != dim || dim == 0) {
      throw ValidationError("cluster_faces: embeddings must share one non-zero dimension");
    }
    if (std::fabs(std::sqrt(dot(e, e)) - 1.0) > 1e-6) {
      throw ValidationError("cluster_faces: embeddings must be L2-normalized");
    }
  }

  struct Cluster {
    std::vector<double> sum;
    int count = 0;
  };
  std::vector<Cluster> clusters;
  std::vector<int> assignment(embeddings.size(), -1);

  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    const auto& e = embeddings[i];
    int best = -1;
    double best_sim = -2.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const double norm = std::sqrt(dot(clusters[c].sum, clusters[c].sum));
      if (norm < 1e-12) {
        continue;  // degenerate centroid; nothing to compare against
      }
      const double sim = dot(e, clusters[c].sum) / norm;
      // Strict > keeps ties on the earliest cluster, making assignment
      // deterministic for identical similarities.
      if (sim > best_sim) {
        best_sim = sim;
        best = static_cast<int>(c);
      }
    }
    if (best >= 0 && best_sim >= similarity_threshold) {
      assignment[i] = best;
      for (std::size_t d = 0; d < dim; ++d) {
        clusters[static_cast<std::size_t>(best)].sum[d] += e[d];
      }
      ++clusters[static_cast<std::size_t>(best)].count;
    } else {
      assignment[i] = static_cast<int>(clusters.size());
      clusters.push_back({e, 1});
    }
  }
  return assignment;
}

}  // namespace hive::understanding
