#ifndef PSOMOTIF_PSO_HPP
#define PSOMOTIF_PSO_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "psomotif/random.hpp"

namespace psomotif {

inline constexpr std::size_t kMaxParticles = 100;

struct PsoConfig {
    std::size_t n_particles = 20;
    std::size_t max_iter = 100;
    double inertia = 0.72;
    double c1 = 1.49; // cognitive
    double c2 = 1.49; // social
    std::optional<double> v_max; // uniform clamp; overrides any per-dimension clamp
    std::uint64_t seed = 0;
    std::size_t patience = 0; // stop after this many non-improving iterations; 0 = off

    void validate() const;
};

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest_position;
    double pbest_fitness = std::numeric_limits<double>::infinity();
    double current_fitness = std::numeric_limits<double>::infinity();
};

struct Swarm {
    std::vector<Particle> particles;
    std::vector<double> gbest_position;
    double gbest_fitness = std::numeric_limits<double>::infinity();
    std::size_t iteration = 0;
    std::vector<double> trace; // gbest_fitness after each iteration
};

using Objective = std::function<double(std::span<const double>)>;

/// Global-best PSO with inertia weight, minimizing `fitness`.
///
/// Each iteration evaluates every particle, updates pbest and gbest, then
/// moves: v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x), x <- x + v, with
/// r1, r2 drawn per dimension. Velocities are clamped to +-v_max when a clamp
/// is configured (cfg.v_max, else `v_max_per_dim` when non-empty). Initial
/// velocities are uniform in the clamp box, or zero without a clamp.
Swarm pso_optimize(const Objective& fitness, const std::vector<std::vector<double>>& init_positions,
                   const PsoConfig& cfg, std::span<const double> v_max_per_dim = {});

namespace detail {

/// Position update applied after the velocity update.
using MoveRule = std::function<void(Particle&, std::size_t particle, std::size_t iteration)>;

/// Shared driver for the continuous and binary swarms. `keys` gives each
/// dimension a stable identity for the counter-based random draws.
Swarm run_swarm(const Objective& fitness, std::vector<Particle> particles, const PsoConfig& cfg,
                std::span<const double> v_max_per_dim, std::span<const std::uint64_t> keys,
                const MoveRule& move);

// Draw streams.
inline constexpr std::uint64_t kStreamInitVelocity = 0;
inline constexpr std::uint64_t kStreamCognitive = 1;
inline constexpr std::uint64_t kStreamSocial = 2;
inline constexpr std::uint64_t kStreamMove = 3;

} // namespace detail

} // namespace psomotif

#endif
