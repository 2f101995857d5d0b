#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace lpr::eval {

struct KMeansResult {
  std::vector<int> labels;        // one per row, in [0, k)
  Eigen::MatrixXd centroids;      // k rows
  std::vector<double> wcss_history;  // within-cluster sum of squares per iteration
  int iterations = 0;
};

/// k-means++ seeding with a pinned uniform mapping, deterministic per seed.
Eigen::MatrixXd kmeans_pp_init(const Eigen::MatrixXd& points, int k, std::uint64_t seed);

/// Lloyd iterations from the given centroids until the largest centroid
/// movement drops below tol or max_iterations is hit. Assignment ties break
/// toward the lower centroid index; empty clusters keep their centroid.
KMeansResult kmeans_lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd centroids,
                          int max_iterations = 300, double tol = 1e-6);

/// kmeans_pp_init + kmeans_lloyd. Requires 1 <= k <= row count.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed);

}  // namespace lpr::eval
