#include "psomotif/psokmeans.hpp"

#include <algorithm>
#include <limits>

#include "psomotif/error.hpp"

namespace psomotif {

std::vector<double> CentroidCodec::encode(const Matrix& centroids) const {
    require(centroids.rows() == k_ && centroids.cols() == dim_, "CentroidCodec: shape mismatch");
    return {centroids.data().begin(), centroids.data().end()};
}

Matrix CentroidCodec::decode(std::span<const double> position) const {
    require(position.size() == length(), "CentroidCodec: position has the wrong length");
    return Matrix(k_, dim_, std::vector<double>(position.begin(), position.end()));
}

ClusteringObjective::ClusteringObjective(const Matrix& data, std::size_t k, Distance dist)
    : data_(data), codec_(k, data.cols()), dist_(std::move(dist)) {
    require(data.rows() > 0, "clustering: empty dataset");
    Matrix mean(1, data.cols());
    for (std::size_t i = 0; i < data.rows(); ++i)
        for (std::size_t d = 0; d < data.cols(); ++d) mean(0, d) += data(i, d);
    for (std::size_t d = 0; d < data.cols(); ++d) mean(0, d) /= static_cast<double>(data.rows());
    for (std::size_t i = 0; i < data.rows(); ++i) spread_ += dist_(data.row(i), mean.row(0));
}

double ClusteringObjective::operator()(std::span<const double> position) const {
    const auto k = codec_.k();
    const auto dim = codec_.dim();
    std::vector<bool> used(k, false);
    double total = 0.0;
    for (std::size_t i = 0; i < data_.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t c = 0; c < k; ++c) {
            double d = dist_(data_.row(i), position.subspan(c * dim, dim));
            if (d < best) best = d, arg = c;
        }
        used[arg] = true;
        total += best;
    }
    auto empty = static_cast<double>(std::count(used.begin(), used.end(), false));
    return (total + empty * spread_) / static_cast<double>(k);
}

std::vector<std::vector<double>> initial_particles(const Matrix& data, const PsoKMeansConfig& cfg,
                                                   const Distance& dist) {
    std::vector<std::vector<double>> out;
    out.reserve(cfg.pso.n_particles);
    for (std::size_t p = 0; p < cfg.pso.n_particles; ++p) {
        auto items = sample_items(data, cfg.k, cfg.init == KMeansInit::balanced ? KMeansInit::sample : cfg.init,
                                  dist, cfg.pso.seed, 1000 + p);
        std::vector<double> pos;
        pos.reserve(cfg.k * data.cols());
        for (auto i : items) pos.insert(pos.end(), data.row(i).begin(), data.row(i).end());
        out.push_back(std::move(pos));
    }
    return out;
}

PsoKMeansResult pso_kmeans_run(const Matrix& data, const PsoKMeansConfig& cfg, const Distance& dist) {
    require(cfg.k >= 1, "pso_kmeans: k must be at least 1");
    require(cfg.k <= data.rows(), "pso_kmeans: k exceeds the number of items");
    require(cfg.v_max_fraction > 0.0, "pso_kmeans: v_max_fraction must be positive");
    cfg.pso.validate();

    ClusteringObjective objective(data, cfg.k, dist);

    // Clamp each dimension to a fraction of the data range, repeated per centroid.
    std::vector<double> v_max(cfg.k * data.cols());
    for (std::size_t d = 0; d < data.cols(); ++d) {
        auto col = data.column(d);
        auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        for (std::size_t c = 0; c < cfg.k; ++c) v_max[c * data.cols() + d] = cfg.v_max_fraction * (*hi - *lo);
    }

    PsoKMeansResult result;
    result.swarm = pso_optimize([&](std::span<const double> x) { return objective(x); },
                                initial_particles(data, cfg, dist), cfg.pso, v_max);

    auto& cs = result.clusters;
    cs.k = cfg.k;
    cs.centroids = objective.codec().decode(result.swarm.gbest_position);
    cs.assignment = assign_nearest(data, cs.centroids, dist);
    cs.final_fitness = intra_cluster_fitness(data, cs.assignment, cs.centroids, dist);
    if (cfg.refine) {
        auto centroids = update_centroids(data, cs.assignment, cs.centroids, CentroidUpdate::mean);
        auto assignment = assign_nearest(data, centroids, dist);
        double f = intra_cluster_fitness(data, assignment, centroids, dist);
        if (f < cs.final_fitness) {
            cs.centroids = std::move(centroids);
            cs.assignment = std::move(assignment);
            cs.final_fitness = f;
        }
    }
    cs.iterations_run = result.swarm.iteration;
    cs.converged = false;
    cs.trace = result.swarm.trace;
    return result;
}

} // namespace psomotif
