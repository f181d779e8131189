#include "psomotif/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psomotif/error.hpp"

namespace psomotif {

double cityblock(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "cityblock: operands differ in size");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

double cityblock(const Matrix& a, const Matrix& b) {
    require(a.same_shape(b), "cityblock: matrices differ in shape");
    return cityblock(a.data(), b.data());
}

Distance cityblock_distance() {
    return [](std::span<const double> a, std::span<const double> b) { return cityblock(a, b); };
}

Distance distance_by_name(std::string_view name) {
    if (name == "cityblock") return cityblock_distance();
    if (name == "euclidean")
        return [](std::span<const double> a, std::span<const double> b) {
            require(a.size() == b.size(), "euclidean: operands differ in size");
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
            return std::sqrt(s);
        };
    throw ValidationError("unknown distance '" + std::string(name) + "' (cityblock|euclidean)");
}

double intra_cluster_fitness(const Matrix& data, std::span<const std::size_t> assignment,
                             const Matrix& centroids, const Distance& dist) {
    require(data.rows() > 0, "intra_cluster_fitness: empty dataset");
    require(centroids.rows() > 0, "intra_cluster_fitness: no clusters");
    require(assignment.size() == data.rows(), "intra_cluster_fitness: assignment size mismatch");
    require(centroids.cols() == data.cols(), "intra_cluster_fitness: centroid shape mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        require(assignment[i] < centroids.rows(), "intra_cluster_fitness: cluster index out of range");
        total += dist(data.row(i), centroids.row(assignment[i]));
    }
    return total / static_cast<double>(centroids.rows());
}

double msr(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    require(!rows.empty() && !cols.empty(), "msr: empty index set");
    for (auto i : rows) require(i < m.rows(), "msr: row index out of range");
    for (auto j : cols) require(j < m.cols(), "msr: column index out of range");

    const auto nr = static_cast<double>(rows.size());
    const auto nc = static_cast<double>(cols.size());
    std::vector<double> row_mean(rows.size(), 0.0), col_mean(cols.size(), 0.0);
    double all = 0.0;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) {
            double v = m(rows[a], cols[b]);
            row_mean[a] += v;
            col_mean[b] += v;
            all += v;
        }
    for (auto& v : row_mean) v /= nc;
    for (auto& v : col_mean) v /= nr;
    all /= nr * nc;

    double s = 0.0;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) {
            double r = m(rows[a], cols[b]) - row_mean[a] - col_mean[b] + all;
            s += r * r;
        }
    return s / (nr * nc);
}

StructureProfile build_profile(std::span<const StructureWindowSet> members) {
    StructureProfile p;
    for (const auto& set : members) {
        for (const auto& seg : set.segments) {
            if (p.freqs.empty()) p.freqs.assign(seg.size(), {0.0, 0.0, 0.0});
            require(seg.size() == p.freqs.size(), "build_profile: segments differ in length");
            for (std::size_t i = 0; i < seg.size(); ++i) {
                switch (seg[i]) {
                case 'H': p.freqs[i][0] += 1.0; break;
                case 'E': p.freqs[i][1] += 1.0; break;
                case 'C': p.freqs[i][2] += 1.0; break;
                default: throw ContractViolation("build_profile: label outside {H,E,C}");
                }
            }
            ++p.n_segments;
        }
    }
    require(p.n_segments > 0, "build_profile: group has no structure segments");
    const auto n = static_cast<double>(p.n_segments);
    for (auto& row : p.freqs)
        for (auto& f : row) f /= n;
    return p;
}

double structure_similarity(const StructureProfile& profile) {
    require(!profile.freqs.empty(), "structure_similarity: empty profile");
    double s = 0.0;
    for (const auto& row : profile.freqs) s += std::max({row[0], row[1], row[2]});
    return s / static_cast<double>(profile.freqs.size());
}

std::string_view to_string(Homology h) noexcept {
    switch (h) {
    case Homology::identical: return "identical";
    case Homology::weak: return "weak";
    case Homology::none: return "none";
    }
    return "none";
}

Homology homology_class(double similarity) {
    if (similarity > 0.70) return Homology::identical;
    if (similarity > 0.60) return Homology::weak;
    return Homology::none;
}

} // namespace psomotif
