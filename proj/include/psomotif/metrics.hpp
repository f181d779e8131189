#ifndef PSOMOTIF_METRICS_HPP
#define PSOMOTIF_METRICS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "psomotif/featurize.hpp"
#include "psomotif/matrix.hpp"

namespace psomotif {

/// Sum of absolute differences. Sizes must match.
double cityblock(std::span<const double> a, std::span<const double> b);
double cityblock(const Matrix& a, const Matrix& b);

using Distance = std::function<double(std::span<const double>, std::span<const double>)>;

Distance cityblock_distance();

/// Distance hook by name ("cityblock" or "euclidean").
Distance distance_by_name(std::string_view name);

/// Summed item-to-centroid distances over all clusters, divided by the
/// number of clusters (centroids.rows()). Empty clusters add nothing.
double intra_cluster_fitness(const Matrix& data, std::span<const std::size_t> assignment,
                             const Matrix& centroids, const Distance& dist = cityblock_distance());

/// Mean square residue of the submatrix rows x cols. Row, column and
/// overall means are taken over the submatrix itself.
double msr(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Per-position H/E/C frequencies over a group's structure segments.
struct StructureProfile {
    std::vector<std::array<double, 3>> freqs; // columns H, E, C
    std::size_t n_segments = 0;

    std::size_t window_size() const noexcept { return freqs.size(); }
};

StructureProfile build_profile(std::span<const StructureWindowSet> members);

/// Mean over positions of the dominant class frequency; in [1/3, 1].
double structure_similarity(const StructureProfile& profile);

enum class Homology { identical, weak, none };

std::string_view to_string(Homology h) noexcept;

/// > 0.70 identical, (0.60, 0.70] weak, otherwise none.
Homology homology_class(double similarity);

} // namespace psomotif

#endif
