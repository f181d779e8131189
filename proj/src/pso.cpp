#include "psomotif/pso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "psomotif/error.hpp"

namespace psomotif {

void PsoConfig::validate() const {
    require(n_particles >= 1 && n_particles <= kMaxParticles, "pso: n_particles must be in [1, 100]");
    require(max_iter >= 1, "pso: max_iter must be positive");
    require(std::isfinite(inertia) && std::isfinite(c1) && std::isfinite(c2),
            "pso: coefficients must be finite");
    require(!v_max || (*v_max > 0.0 && std::isfinite(*v_max)), "pso: v_max must be positive");
}

namespace detail {

Swarm run_swarm(const Objective& fitness, std::vector<Particle> particles, const PsoConfig& cfg,
                std::span<const double> v_max_per_dim, std::span<const std::uint64_t> keys,
                const MoveRule& move) {
    const CounterRng rng(cfg.seed);
    const auto dim = keys.size();

    Swarm swarm;
    swarm.particles = std::move(particles);
    std::size_t stale = 0;

    for (std::size_t iter = 1; iter <= cfg.max_iter; ++iter) {
        // Evaluate; every fitness call is independent of the others.
        for (std::size_t p = 0; p < swarm.particles.size(); ++p) {
            auto& pt = swarm.particles[p];
            double f = fitness(pt.position);
            if (!std::isfinite(f))
                throw NumericError("pso: non-finite fitness for particle " + std::to_string(p) +
                                   " at iteration " + std::to_string(iter));
            pt.current_fitness = f;
            if (f < pt.pbest_fitness) {
                pt.pbest_fitness = f;
                pt.pbest_position = pt.position;
            }
        }
        bool improved = false;
        for (const auto& pt : swarm.particles)
            if (pt.pbest_fitness < swarm.gbest_fitness) {
                swarm.gbest_fitness = pt.pbest_fitness;
                swarm.gbest_position = pt.pbest_position;
                improved = true;
            }
        swarm.iteration = iter;
        swarm.trace.push_back(swarm.gbest_fitness);
        stale = improved ? 0 : stale + 1;
        if (cfg.patience > 0 && stale >= cfg.patience) break;

        for (std::size_t p = 0; p < swarm.particles.size(); ++p) {
            auto& pt = swarm.particles[p];
            for (std::size_t d = 0; d < dim; ++d) {
                double r1 = rng.uniform(iter, p, keys[d], kStreamCognitive);
                double r2 = rng.uniform(iter, p, keys[d], kStreamSocial);
                double v = cfg.inertia * pt.velocity[d] +
                           cfg.c1 * r1 * (pt.pbest_position[d] - pt.position[d]) +
                           cfg.c2 * r2 * (swarm.gbest_position[d] - pt.position[d]);
                if (!v_max_per_dim.empty()) v = std::clamp(v, -v_max_per_dim[d], v_max_per_dim[d]);
                pt.velocity[d] = v;
            }
            move(pt, p, iter);
        }
    }
    return swarm;
}

} // namespace detail

Swarm pso_optimize(const Objective& fitness, const std::vector<std::vector<double>>& init_positions,
                   const PsoConfig& cfg, std::span<const double> v_max_per_dim) {
    cfg.validate();
    require(!init_positions.empty(), "pso: no initial positions");
    require(init_positions.size() == cfg.n_particles,
            "pso: number of initial positions differs from n_particles");
    const auto dim = init_positions.front().size();
    for (const auto& x : init_positions)
        require(x.size() == dim, "pso: initial positions differ in dimension");
    require(v_max_per_dim.empty() || v_max_per_dim.size() == dim,
            "pso: per-dimension v_max has the wrong size");

    std::vector<double> clamp;
    if (cfg.v_max)
        clamp.assign(dim, *cfg.v_max);
    else
        clamp.assign(v_max_per_dim.begin(), v_max_per_dim.end());

    std::vector<std::uint64_t> keys(dim);
    std::iota(keys.begin(), keys.end(), std::uint64_t{0});

    const CounterRng rng(cfg.seed);
    std::vector<Particle> particles(init_positions.size());
    for (std::size_t p = 0; p < particles.size(); ++p) {
        auto& pt = particles[p];
        pt.position = init_positions[p];
        pt.velocity.assign(dim, 0.0);
        if (!clamp.empty())
            for (std::size_t d = 0; d < dim; ++d)
                pt.velocity[d] =
                    (2.0 * rng.uniform(0, p, keys[d], detail::kStreamInitVelocity) - 1.0) * clamp[d];
        pt.pbest_position = pt.position;
    }

    auto move = [](Particle& pt, std::size_t, std::size_t) {
        for (std::size_t d = 0; d < pt.position.size(); ++d) pt.position[d] += pt.velocity[d];
    };
    return detail::run_swarm(fitness, std::move(particles), cfg, clamp, keys, move);
}

} // namespace psomotif
