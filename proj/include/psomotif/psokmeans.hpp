#ifndef PSOMOTIF_PSOKMEANS_HPP
#define PSOMOTIF_PSOKMEANS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "psomotif/kmeans.hpp"
#include "psomotif/matrix.hpp"
#include "psomotif/metrics.hpp"
#include "psomotif/pso.hpp"

namespace psomotif {

/// Packs k centroids of `dim` values each into one flat particle position.
class CentroidCodec {
public:
    CentroidCodec(std::size_t k, std::size_t dim) : k_(k), dim_(dim) {}

    std::size_t k() const noexcept { return k_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t length() const noexcept { return k_ * dim_; }

    std::vector<double> encode(const Matrix& centroids) const;
    Matrix decode(std::span<const double> position) const;

private:
    std::size_t k_;
    std::size_t dim_;
};

/// The swarm objective: the intra-cluster fitness of the nearest-centroid
/// assignment induced by a particle, plus spread() for every cluster the
/// particle leaves empty, added to the summed distance before dividing by k.
class ClusteringObjective {
public:
    ClusteringObjective(const Matrix& data, std::size_t k, Distance dist = cityblock_distance());

    double operator()(std::span<const double> position) const;

    /// Total distance of the items from their componentwise mean.
    double spread() const noexcept { return spread_; }
    const CentroidCodec& codec() const noexcept { return codec_; }

private:
    const Matrix& data_;
    CentroidCodec codec_;
    Distance dist_;
    double spread_ = 0.0;
};

struct PsoKMeansConfig {
    std::size_t k = 5;
    PsoConfig pso;
    double v_max_fraction = 0.2; // per-dimension clamp as a fraction of the data range
    KMeansInit init = KMeansInit::sample; // how each particle picks its k items
    bool refine = false; // one Lloyd pass on the gbest centroids
};

/// Initial particle positions: k items per particle, drawn per `cfg.init`.
std::vector<std::vector<double>> initial_particles(const Matrix& data, const PsoKMeansConfig& cfg,
                                                   const Distance& dist);

struct PsoKMeansResult {
    ClusterSet clusters;
    Swarm swarm;
};

PsoKMeansResult pso_kmeans_run(const Matrix& data, const PsoKMeansConfig& cfg,
                               const Distance& dist = cityblock_distance());

inline ClusterSet pso_kmeans(const Matrix& data, const PsoKMeansConfig& cfg,
                             const Distance& dist = cityblock_distance()) {
    return pso_kmeans_run(data, cfg, dist).clusters;
}

} // namespace psomotif

#endif
