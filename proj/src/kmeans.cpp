#include "psomotif/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "psomotif/error.hpp"
#include "psomotif/random.hpp"

namespace psomotif {

std::string_view to_string(CentroidUpdate u) noexcept {
    return u == CentroidUpdate::mean ? "mean" : "median";
}

CentroidUpdate parse_centroid_update(std::string_view s) {
    if (s == "mean") return CentroidUpdate::mean;
    if (s == "median") return CentroidUpdate::median;
    throw ValidationError("unknown centroid update '" + std::string(s) + "' (mean|median)");
}

std::string_view to_string(KMeansInit i) noexcept {
    switch (i) {
    case KMeansInit::plusplus: return "plusplus";
    case KMeansInit::sample: return "sample";
    case KMeansInit::balanced: return "balanced";
    }
    return "plusplus";
}

KMeansInit parse_kmeans_init(std::string_view s) {
    if (s == "plusplus") return KMeansInit::plusplus;
    if (s == "sample") return KMeansInit::sample;
    if (s == "balanced") return KMeansInit::balanced;
    throw ValidationError("unknown k-means init '" + std::string(s) + "' (plusplus|sample|balanced)");
}

std::vector<std::vector<std::size_t>> ClusterSet::members() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < assignment.size(); ++i) out[assignment[i]].push_back(i);
    return out;
}

std::vector<std::size_t> assign_nearest(const Matrix& data, const Matrix& centroids,
                                        const Distance& dist) {
    std::vector<std::size_t> out(data.rows(), 0);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centroids.rows(); ++c) {
            double d = dist(data.row(i), centroids.row(c));
            if (d < best) best = d, out[i] = c;
        }
    }
    return out;
}

Matrix update_centroids(const Matrix& data, std::span<const std::size_t> assignment,
                        const Matrix& previous, CentroidUpdate rule) {
    Matrix out = previous;
    const auto k = previous.rows();
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < assignment.size(); ++i) members[assignment[i]].push_back(i);

    std::vector<double> values;
    for (std::size_t c = 0; c < k; ++c) {
        const auto& m = members[c];
        if (m.empty()) continue;
        for (std::size_t d = 0; d < data.cols(); ++d) {
            if (rule == CentroidUpdate::mean) {
                double s = 0.0;
                for (auto i : m) s += data(i, d);
                out(c, d) = s / static_cast<double>(m.size());
            } else {
                values.clear();
                for (auto i : m) values.push_back(data(i, d));
                std::sort(values.begin(), values.end());
                auto n = values.size();
                out(c, d) = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
            }
        }
    }
    return out;
}

std::vector<std::size_t> sample_items(const Matrix& data, std::size_t k, KMeansInit init,
                                      const Distance& dist, std::uint64_t seed,
                                      std::uint64_t stream) {
    const auto n = data.rows();
    require(k >= 1 && k <= n, "sample_items: need 1 <= k <= number of items");
    StreamRng rng(seed, stream);

    if (init != KMeansInit::plusplus) {
        // Partial Fisher-Yates.
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
        idx.resize(k);
        return idx;
    }

    std::vector<std::size_t> chosen{static_cast<std::size_t>(rng.below(n))};
    std::vector<bool> taken(n, false);
    taken[chosen[0]] = true;
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    while (chosen.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = dist(data.row(i), data.row(chosen.back()));
            nearest[i] = std::min(nearest[i], d * d);
            if (!taken[i]) total += nearest[i];
        }
        std::size_t pick = n;
        if (total > 0.0) {
            double target = rng.uniform() * total, acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                acc += nearest[i];
                pick = i;
                if (acc > target) break;
            }
        } else {
            // Remaining items coincide with chosen ones; fall back to uniform.
            auto r = rng.below(n - chosen.size());
            for (std::size_t i = 0; i < n; ++i)
                if (!taken[i] && r-- == 0) { pick = i; break; }
        }
        taken[pick] = true;
        chosen.push_back(pick);
    }
    return chosen;
}

namespace {

Matrix initial_centroids(const Matrix& data, const KMeansConfig& cfg, const Distance& dist) {
    Matrix c(cfg.k, data.cols());
    if (cfg.init == KMeansInit::balanced) {
        StreamRng rng(cfg.seed);
        std::vector<std::size_t> idx(data.rows());
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
        std::vector<std::size_t> assignment(data.rows());
        for (std::size_t r = 0; r < idx.size(); ++r) assignment[idx[r]] = r % cfg.k;
        return update_centroids(data, assignment, c, CentroidUpdate::mean);
    }
    auto items = sample_items(data, cfg.k, cfg.init, dist, cfg.seed);
    for (std::size_t i = 0; i < cfg.k; ++i)
        std::copy(data.row(items[i]).begin(), data.row(items[i]).end(), c.row(i).begin());
    return c;
}

// Moves the centroid of every empty cluster onto the item farthest from it.
void repair_empty(const Matrix& data, std::span<const std::size_t> assignment, Matrix& centroids,
                  const Distance& dist) {
    std::vector<std::size_t> sizes(centroids.rows(), 0);
    for (auto a : assignment) ++sizes[a];
    for (std::size_t c = 0; c < centroids.rows(); ++c) {
        if (sizes[c] > 0) continue;
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < data.rows(); ++i) {
            double d = dist(data.row(i), centroids.row(c));
            if (d > far_d) far_d = d, far = i;
        }
        std::copy(data.row(far).begin(), data.row(far).end(), centroids.row(c).begin());
    }
}

} // namespace

ClusterSet kmeans_run(const Matrix& data, const KMeansConfig& cfg, const Distance& dist) {
    require(cfg.k >= 1, "kmeans: k must be at least 1");
    require(cfg.k <= data.rows(), "kmeans: k exceeds the number of items");
    require(cfg.max_iter >= 1, "kmeans: max_iter must be at least 1");

    Matrix centroids = initial_centroids(data, cfg, dist);
    std::vector<std::size_t> assignment;

    ClusterSet best;
    best.k = cfg.k;
    best.final_fitness = std::numeric_limits<double>::infinity();

    for (std::size_t iter = 1; iter <= cfg.max_iter; ++iter) {
        auto next = assign_nearest(data, centroids, dist);
        bool unchanged = next == assignment;
        assignment = std::move(next);
        best.iterations_run = iter;
        if (unchanged) {
            best.converged = true;
            break;
        }
        centroids = update_centroids(data, assignment, centroids, cfg.update);
        double fitness = intra_cluster_fitness(data, assignment, centroids, dist);
        best.trace.push_back(fitness);
        if (fitness < best.final_fitness) {
            best.final_fitness = fitness;
            best.centroids = centroids;
            best.assignment = assignment;
        }
        repair_empty(data, assignment, centroids, dist);
    }
    return best;
}

} // namespace psomotif
