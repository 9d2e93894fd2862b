#pragma once

#include <vector>

namespace hive::understanding {

// Greedy incremental clustering of unit-norm face embeddings. Samples are
// visited in order; each joins the existing cluster whose running centroid has
// the highest cosine similarity, provided that similarity reaches
// `similarity_threshold`, and otherwise founds a new cluster. Returns one
// 0-based cluster id per sample; ids are dense and numbered by founding order.
//
// Embeddings must all share one dimension and have L2 norm 1 within 1e-6.
std::vector<int> cluster_faces(const std::vector<std::vector<double>>& embeddings,
                               double similarity_threshold);

}  // namespace hive::understanding
