#ifndef PSOMOTIF_CONFIG_HPP
#define PSOMOTIF_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "psomotif/featurize.hpp"
#include "psomotif/kmeans.hpp"
#include "psomotif/pso.hpp"
#include "psomotif/psobiclust.hpp"
#include "psomotif/psokmeans.hpp"

namespace psomotif {

enum class Engine { kmeans, pso_kmeans };

std::string_view to_string(Engine e) noexcept;
Engine parse_engine(std::string_view s);

/// Everything a pipeline run depends on. Keys accepted by set() use the
/// command-line spelling (`k-rows`, `v-max`, ...); underscores also work.
struct RunConfig {
    std::string sequences;
    std::string structures;

    std::size_t window_size = kDefaultWindowSize;
    WindowMode window_mode = WindowMode::reshape;
    Normalization normalization = Normalization::mean;
    bool relax_alphabet = false;
    std::string distance = "cityblock";

    Engine engine = Engine::pso_kmeans;
    std::size_t k = 5;
    std::size_t kmeans_max_iter = 100;
    CentroidUpdate centroid_update = CentroidUpdate::mean;
    KMeansInit kmeans_init = KMeansInit::plusplus;
    KMeansInit particle_init = KMeansInit::sample;

    std::size_t particles = 20;
    std::size_t iterations = 100;
    double inertia = 0.72;
    double c1 = 1.49;
    double c2 = 1.49;
    std::optional<double> v_max;
    double v_max_fraction = 0.2;
    std::size_t patience = 0;
    bool refine = false;

    std::size_t k_rows = 5;
    std::size_t k_cols = 4;
    std::size_t bicluster_particles = 0; // 0 = one per seed
    std::size_t bicluster_iterations = 100;
    double bicluster_inertia = 0.95;
    std::optional<double> lambda;
    double velocity_clamp = 4.0;
    std::size_t min_rows = 2;
    std::size_t min_cols = 2;

    std::vector<double> thresholds{0.70, 0.65, 0.60};
    double saa_threshold = 0.07;
    bool logo_correction = true;

    std::uint64_t seed = 0;
    bool trace = false;

    /// Parses and stores one value; throws ValidationError for unknown keys
    /// or malformed values.
    void set(std::string_view key, std::string_view value);

    /// Range checks across all fields; throws ValidationError.
    void validate() const;

    nlohmann::json to_json() const;

    ParseOptions parse_options() const { return {relax_alphabet, window_size}; }
    KMeansConfig kmeans_config() const;
    PsoKMeansConfig pso_kmeans_config() const;
    /// Seeding configuration for biclustering (rows use seed+1, columns seed+2).
    PsoKMeansConfig bicluster_seed_config() const;
    BiclusterConfig bicluster_config() const;
};

/// The keys set() understands.
const std::vector<std::string>& config_keys();

} // namespace psomotif

#endif
