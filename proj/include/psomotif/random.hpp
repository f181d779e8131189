#ifndef PSOMOTIF_RANDOM_HPP
#define PSOMOTIF_RANDOM_HPP

#include <cstdint>

namespace psomotif {

// Counter-based uniform draws. A draw is a pure function of
// (seed, iteration, particle, key, stream), so results do not depend on the
// order in which particles or dimensions are visited.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(splitmix64(seed)) {}

    /// Uniform in [0, 1).
    double uniform(std::uint64_t iteration, std::uint64_t particle, std::uint64_t key,
                   std::uint64_t stream) const noexcept {
        std::uint64_t h = splitmix64(seed_ ^ iteration);
        h = splitmix64(h ^ particle);
        h = splitmix64(h ^ key);
        h = splitmix64(h ^ stream);
        return static_cast<double>(h >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

/// Sequential stream over CounterRng for code with a natural draw order.
class StreamRng {
public:
    explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : rng_(seed), stream_(stream) {}

    double uniform() noexcept { return rng_.uniform(0, stream_, counter_++, 0x5eed); }

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) noexcept {
        auto v = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
        return v < n ? v : n - 1;
    }

private:
    CounterRng rng_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace psomotif

#endif
