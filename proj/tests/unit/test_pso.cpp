#include "doctest.h"

#include <cmath>
#include <limits>

#include "psomotif/error.hpp"
#include "psomotif/pso.hpp"
#include "psomotif/random.hpp"

using namespace psomotif;

namespace {

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

std::vector<std::vector<double>> cube_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
    StreamRng rng(seed, 17);
    std::vector<std::vector<double>> out(n, std::vector<double>(dim));
    for (auto& p : out)
        for (auto& v : p) v = -5.0 + 10.0 * rng.uniform();
    return out;
}

} // namespace

TEST_CASE("sphere function converges") {
    PsoConfig cfg;
    cfg.n_particles = 10;
    cfg.max_iter = 200;
    cfg.v_max = 2.0;
    auto swarm = pso_optimize(sphere, cube_points(10, 4, 1), cfg);
    CHECK(swarm.gbest_fitness < 1e-3);
    CHECK(swarm.iteration == 200);
}

TEST_CASE("particle seeded on the optimum keeps it") {
    PsoConfig cfg;
    cfg.n_particles = 5;
    cfg.max_iter = 30;
    auto init = cube_points(5, 3, 2);
    init[2] = {0.0, 0.0, 0.0};
    auto swarm = pso_optimize(sphere, init, cfg);
    REQUIRE(!swarm.trace.empty());
    CHECK(swarm.trace.front() == 0.0);
    for (double f : swarm.trace) CHECK(f == 0.0);
}

TEST_CASE("one iteration is one evaluate/update cycle") {
    PsoConfig cfg;
    cfg.n_particles = 4;
    cfg.max_iter = 1;
    std::size_t calls = 0;
    auto counting = [&](std::span<const double> x) {
        ++calls;
        return sphere(x);
    };
    auto swarm = pso_optimize(counting, cube_points(4, 2, 3), cfg);
    CHECK(swarm.iteration == 1);
    CHECK(swarm.trace.size() == 1);
    CHECK(calls == 4);
}

TEST_CASE("gbest trace is non-increasing") {
    PsoConfig cfg;
    cfg.n_particles = 12;
    cfg.max_iter = 80;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        cfg.seed = seed;
        auto rastrigin = [](std::span<const double> x) {
            double s = 10.0 * static_cast<double>(x.size());
            for (double v : x) s += v * v - 10.0 * std::cos(2.0 * 3.141592653589793 * v);
            return s;
        };
        auto swarm = pso_optimize(rastrigin, cube_points(12, 3, seed), cfg);
        for (std::size_t i = 1; i < swarm.trace.size(); ++i) CHECK(swarm.trace[i] <= swarm.trace[i - 1]);
    }
}

TEST_CASE("same seed gives identical swarms") {
    PsoConfig cfg;
    cfg.n_particles = 6;
    cfg.max_iter = 40;
    cfg.seed = 99;
    std::vector<double> vmax(3, 1.0);
    auto a = pso_optimize(sphere, cube_points(6, 3, 4), cfg, vmax);
    auto b = pso_optimize(sphere, cube_points(6, 3, 4), cfg, vmax);
    CHECK(a.gbest_position == b.gbest_position);
    CHECK(a.trace == b.trace);
    cfg.seed = 100;
    auto c = pso_optimize(sphere, cube_points(6, 3, 4), cfg, vmax);
    CHECK(c.trace != a.trace);
}

TEST_CASE("patience stops a stalled swarm early") {
    PsoConfig cfg;
    cfg.n_particles = 3;
    cfg.max_iter = 500;
    cfg.patience = 5;
    auto flat = [](std::span<const double>) { return 1.0; };
    auto swarm = pso_optimize(flat, cube_points(3, 2, 5), cfg);
    CHECK(swarm.iteration < 500);
}

TEST_CASE("configuration and objective errors") {
    PsoConfig cfg;
    cfg.n_particles = 0;
    CHECK_THROWS_AS(cfg.validate(), ContractViolation);
    cfg.n_particles = kMaxParticles + 1;
    CHECK_THROWS_AS(cfg.validate(), ContractViolation);
    cfg.n_particles = 2;
    cfg.max_iter = 0;
    CHECK_THROWS_AS(cfg.validate(), ContractViolation);

    PsoConfig ok;
    ok.n_particles = 2;
    ok.max_iter = 3;
    auto nan_objective = [](std::span<const double>) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(pso_optimize(nan_objective, cube_points(2, 2, 6), ok), NumericError);
    CHECK_THROWS_AS(pso_optimize(sphere, cube_points(3, 2, 6), ok), ContractViolation);
}

TEST_CASE("counter RNG draws are addressable and in range") {
    CounterRng rng(7);
    CHECK(rng.uniform(1, 2, 3, 4) == rng.uniform(1, 2, 3, 4));
    CHECK(rng.uniform(1, 2, 3, 4) != rng.uniform(1, 2, 3, 5));
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        double u = rng.uniform(i, 0, 0, 0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}
