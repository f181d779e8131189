#ifndef PSOMOTIF_PSOBICLUST_HPP
#define PSOMOTIF_PSOBICLUST_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psomotif/matrix.hpp"
#include "psomotif/pso.hpp"
#include "psomotif/psokmeans.hpp"

namespace psomotif {

/// Row subset (sequences) x column subset (amino acids) of a matrix.
struct Bicluster {
    std::vector<std::size_t> rows; // sorted, unique
    std::vector<std::size_t> cols; // sorted, unique
    double msr = 0.0;

    std::size_t volume() const noexcept { return rows.size() * cols.size(); }
    friend bool operator==(const Bicluster&, const Bicluster&) = default;
};

/// Builds a bicluster from index sets and computes its MSR.
Bicluster make_bicluster(const Matrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols);

/// Cross product of PSO k-means partitions of the rows and of the columns.
/// Row and column runs use `base` with seeds base.pso.seed and
/// base.pso.seed + 1. Empty cells of the cross product are skipped.
std::vector<Bicluster> seed_biclusters(const Matrix& m, std::size_t k_rows, std::size_t k_cols,
                                       const PsoKMeansConfig& base);

/// MSR minus a volume reward: msr - lambda * |I||J| / (rows * cols).
class BiclusterObjective {
public:
    BiclusterObjective(const Matrix& m, double lambda) : m_(m), lambda_(lambda) {}

    double operator()(std::span<const double> bits) const;
    double operator()(const Bicluster& b) const;

    /// Decodes membership bits (rows first, then columns).
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> decode(std::span<const double> bits) const;

    double lambda() const noexcept { return lambda_; }

private:
    const Matrix& m_;
    double lambda_;
};

struct BiclusterConfig {
    PsoConfig pso = [] {
        PsoConfig c;
        c.n_particles = 0; // one particle per seed
        c.inertia = 0.95;  // slow decay keeps settled bits in place
        return c;
    }();
    std::optional<double> lambda;  // default 0.1 * MSR of the full matrix
    double velocity_clamp = 4.0;
    // A single row or column always has MSR 0, so smaller biclusters are trivial.
    std::size_t min_rows = 2;
    std::size_t min_cols = 2;
    /// Stable identity per matrix row for the random draws; empty = row index.
    std::vector<std::uint64_t> row_keys;
};

double default_lambda(const Matrix& m);

struct BiclusterResult {
    std::vector<Bicluster> biclusters; // gbest first, then distinct pbests by fitness
    std::vector<double> fitness;       // objective value per returned bicluster
    std::vector<double> trace;         // gbest objective per iteration
    double lambda = 0.0;
    std::size_t n_particles = 0;
};

/// Binary PSO over row/column membership bits. Each particle starts on one
/// seed; a bit becomes 1 when a fresh uniform draw falls below
/// sigmoid(velocity). A particle left with no rows (or no columns) gets the
/// bit with the highest velocity in that half switched on.
BiclusterResult pso_bicluster(const Matrix& m, const BiclusterConfig& cfg,
                              std::span<const Bicluster> seeds);

} // namespace psomotif

#endif
