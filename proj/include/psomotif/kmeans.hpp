#ifndef PSOMOTIF_KMEANS_HPP
#define PSOMOTIF_KMEANS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "psomotif/matrix.hpp"
#include "psomotif/metrics.hpp"

namespace psomotif {

enum class CentroidUpdate { mean, median };

/// Initial centroid selection.
///   plusplus: k distinct items, each drawn with probability proportional to
///             its squared distance from the closest item already chosen.
///   sample:   k distinct items drawn uniformly.
///   balanced: items dealt round-robin into k equal groups after a random
///             shuffle; centroids are the group means.
enum class KMeansInit { plusplus, sample, balanced };

std::string_view to_string(CentroidUpdate u) noexcept;
CentroidUpdate parse_centroid_update(std::string_view s);
std::string_view to_string(KMeansInit i) noexcept;
KMeansInit parse_kmeans_init(std::string_view s);

struct KMeansConfig {
    std::size_t k = 5;
    std::size_t max_iter = 100;
    std::uint64_t seed = 0;
    CentroidUpdate update = CentroidUpdate::mean;
    KMeansInit init = KMeansInit::plusplus;
};

/// A partition of items with one centroid per cluster.
struct ClusterSet {
    std::size_t k = 0;
    Matrix centroids;                   // k x item dimension
    std::vector<std::size_t> assignment; // item -> cluster in [0, k)
    std::size_t iterations_run = 0;
    bool converged = false;
    double final_fitness = 0.0;
    std::vector<double> trace; // per-iteration objective

    std::vector<std::vector<std::size_t>> members() const;
};

/// Nearest centroid per item; ties go to the lowest cluster index.
std::vector<std::size_t> assign_nearest(const Matrix& data, const Matrix& centroids,
                                        const Distance& dist);

/// Recomputes centroids from an assignment. Clusters without members keep
/// their previous centroid.
Matrix update_centroids(const Matrix& data, std::span<const std::size_t> assignment,
                        const Matrix& previous, CentroidUpdate rule);

/// Picks k distinct item indices.
std::vector<std::size_t> sample_items(const Matrix& data, std::size_t k, KMeansInit init,
                                      const Distance& dist, std::uint64_t seed,
                                      std::uint64_t stream = 0);

/// Lloyd iteration. Returns the best (assignment, centroids) pair seen, so
/// the result is never worse than the first iteration even when mean
/// updates do not decrease the L1 objective.
ClusterSet kmeans_run(const Matrix& data, const KMeansConfig& cfg,
                      const Distance& dist = cityblock_distance());

} // namespace psomotif

#endif
