#include "psomotif/psobiclust.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <numeric>

#include "psomotif/error.hpp"
#include "psomotif/metrics.hpp"

namespace psomotif {

Bicluster make_bicluster(const Matrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    require(!rows.empty() && !cols.empty(), "bicluster: empty row or column set");
    Bicluster b{std::move(rows), std::move(cols), 0.0};
    b.msr = msr(m, b.rows, b.cols);
    return b;
}

std::vector<Bicluster> seed_biclusters(const Matrix& m, std::size_t k_rows, std::size_t k_cols,
                                       const PsoKMeansConfig& base) {
    require(m.rows() >= 2 && m.cols() >= 2, "seed_biclusters: matrix needs at least 2 rows and 2 columns");
    require(k_rows >= 1 && k_rows <= m.rows(), "seed_biclusters: k_rows out of range");
    require(k_cols >= 1 && k_cols <= m.cols(), "seed_biclusters: k_cols out of range");

    PsoKMeansConfig row_cfg = base;
    row_cfg.k = k_rows;
    PsoKMeansConfig col_cfg = base;
    col_cfg.k = k_cols;
    col_cfg.pso.seed = base.pso.seed + 1;

    auto row_groups = pso_kmeans(m, row_cfg).members();
    auto col_groups = pso_kmeans(m.transposed(), col_cfg).members();

    std::vector<Bicluster> seeds;
    for (const auto& r : row_groups)
        for (const auto& c : col_groups)
            if (!r.empty() && !c.empty()) seeds.push_back(make_bicluster(m, r, c));
    return seeds;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
BiclusterObjective::decode(std::span<const double> bits) const {
    require(bits.size() == m_.rows() + m_.cols(), "bicluster: bit vector has the wrong length");
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < m_.rows(); ++i)
        if (bits[i] > 0.5) out.first.push_back(i);
    for (std::size_t j = 0; j < m_.cols(); ++j)
        if (bits[m_.rows() + j] > 0.5) out.second.push_back(j);
    return out;
}

double BiclusterObjective::operator()(std::span<const double> bits) const {
    auto [rows, cols] = decode(bits);
    double volume = static_cast<double>(rows.size() * cols.size()) /
                    static_cast<double>(m_.rows() * m_.cols());
    return msr(m_, rows, cols) - lambda_ * volume;
}

double BiclusterObjective::operator()(const Bicluster& b) const {
    double volume = static_cast<double>(b.volume()) / static_cast<double>(m_.rows() * m_.cols());
    return b.msr - lambda_ * volume;
}

double default_lambda(const Matrix& m) {
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return 0.1 * msr(m, rows, cols);
}

namespace {

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

// Switch on the highest-velocity unset bits of [first, last) until at least
// `min_set` bits are set.
void repair(Particle& pt, std::size_t first, std::size_t last, std::size_t min_set) {
    min_set = std::min(min_set, last - first);
    std::size_t set = 0;
    for (std::size_t d = first; d < last; ++d) set += pt.position[d] > 0.5;
    for (; set < min_set; ++set) {
        std::size_t best = last;
        for (std::size_t d = first; d < last; ++d)
            if (pt.position[d] < 0.5 && (best == last || pt.velocity[d] > pt.velocity[best])) best = d;
        pt.position[best] = 1.0;
    }
}

} // namespace

BiclusterResult pso_bicluster(const Matrix& m, const BiclusterConfig& cfg,
                              std::span<const Bicluster> seeds) {
    require(!seeds.empty(), "pso_bicluster: no seeds");
    require(m.rows() >= 1 && m.cols() >= 1, "pso_bicluster: empty matrix");
    require(cfg.velocity_clamp > 0.0, "pso_bicluster: velocity clamp must be positive");
    require(cfg.row_keys.empty() || cfg.row_keys.size() == m.rows(), "pso_bicluster: row_keys size mismatch");

    PsoConfig pso = cfg.pso;
    if (pso.n_particles == 0) pso.n_particles = std::min(seeds.size(), kMaxParticles);
    pso.v_max.reset();
    pso.validate();

    const auto nr = m.rows();
    const auto dim = nr + m.cols();
    BiclusterObjective objective(m, cfg.lambda ? *cfg.lambda : default_lambda(m));

    // Column keys live in a separate range so they never collide with row keys.
    std::vector<std::uint64_t> keys(dim);
    for (std::size_t i = 0; i < nr; ++i) keys[i] = cfg.row_keys.empty() ? i : cfg.row_keys[i];
    for (std::size_t j = 0; j < m.cols(); ++j) keys[nr + j] = (std::uint64_t{1} << 40) + j;
    std::vector<double> clamp(dim, cfg.velocity_clamp);
    const auto min_rows = std::max<std::size_t>(cfg.min_rows, 1);
    const auto min_cols = std::max<std::size_t>(cfg.min_cols, 1);

    const CounterRng rng(pso.seed);
    std::vector<Particle> particles(pso.n_particles);
    for (std::size_t p = 0; p < particles.size(); ++p) {
        const auto& seed = seeds[p % seeds.size()];
        require(!seed.rows.empty() && !seed.cols.empty(), "pso_bicluster: seed with empty index set");
        auto& pt = particles[p];
        pt.position.assign(dim, 0.0);
        for (auto i : seed.rows) {
            require(i < nr, "pso_bicluster: seed row out of range");
            pt.position[i] = 1.0;
        }
        for (auto j : seed.cols) {
            require(j < m.cols(), "pso_bicluster: seed column out of range");
            pt.position[nr + j] = 1.0;
        }
        pt.velocity.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            pt.velocity[d] = (2.0 * rng.uniform(0, p, keys[d], detail::kStreamInitVelocity) - 1.0) *
                             cfg.velocity_clamp;
        repair(pt, 0, nr, min_rows);
        repair(pt, nr, dim, min_cols);
        pt.pbest_position = pt.position;
    }

    auto move = [&](Particle& pt, std::size_t p, std::size_t iter) {
        for (std::size_t d = 0; d < dim; ++d)
            pt.position[d] = rng.uniform(iter, p, keys[d], detail::kStreamMove) < sigmoid(pt.velocity[d]) ? 1.0 : 0.0;
        repair(pt, 0, nr, min_rows);
        repair(pt, nr, dim, min_cols);
    };

    auto swarm = detail::run_swarm([&](std::span<const double> x) { return objective(x); },
                                   std::move(particles), pso, clamp, keys, move);

    BiclusterResult out;
    out.lambda = objective.lambda();
    out.trace = swarm.trace;
    out.n_particles = pso.n_particles;

    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> distinct;
    auto add = [&](std::span<const double> bits) { distinct.insert(objective.decode(bits)); };
    add(swarm.gbest_position);
    for (const auto& pt : swarm.particles) add(pt.pbest_position);

    std::vector<std::pair<double, Bicluster>> ranked;
    auto gbest_key = objective.decode(swarm.gbest_position);
    for (const auto& [rows, cols] : distinct) {
        auto b = make_bicluster(m, rows, cols);
        ranked.emplace_back(objective(b), std::move(b));
    }
    // gbest first, remaining by ascending fitness; ties keep index order.
    std::stable_sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
        bool ga = a.second.rows == gbest_key.first && a.second.cols == gbest_key.second;
        bool gb = b.second.rows == gbest_key.first && b.second.cols == gbest_key.second;
        if (ga != gb) return ga;
        return a.first < b.first;
    });
    for (auto& [f, b] : ranked) {
        out.fitness.push_back(f);
        out.biclusters.push_back(std::move(b));
    }
    return out;
}

} // namespace psomotif
